#include "core/instance.hpp"

#include <cmath>
#include <unordered_set>

#include "core/errors.hpp"

namespace dockclique {

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

std::string kind_name(PharmKind kind) {
  switch (kind) {
    case PharmKind::Hydrophobic:
      return "hydrophobic";
    case PharmKind::HBondDonor:
      return "donor";
    case PharmKind::HBondAcceptor:
      return "acceptor";
    case PharmKind::Aromatic:
      return "aromatic";
    case PharmKind::Other:
      return "other";
  }
  return "other";
}

PharmKind parse_kind(const std::string& text, std::string* tag_out) {
  if (tag_out != nullptr) tag_out->clear();
  if (text == "hydrophobic") return PharmKind::Hydrophobic;
  if (text == "donor") return PharmKind::HBondDonor;
  if (text == "acceptor") return PharmKind::HBondAcceptor;
  if (text == "aromatic") return PharmKind::Aromatic;
  if (tag_out != nullptr) *tag_out = text;
  return PharmKind::Other;
}

std::string Pharmacophore::kind_string() const {
  if (kind == PharmKind::Other && !tag.empty()) return tag;
  return kind_name(kind);
}

bool kinds_compatible(const Pharmacophore& a, const Pharmacophore& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == PharmKind::Other) return a.tag == b.tag;
  return true;
}

namespace {

void check_set(const std::vector<Pharmacophore>& points, const char* which) {
  std::unordered_set<int> ids;
  for (const Pharmacophore& p : points) {
    if (!ids.insert(p.id).second) {
      fail(ErrorCode::Validation, std::string(which) + " pharmacophore id " +
                                      std::to_string(p.id) + " is duplicated");
    }
    if (!std::isfinite(p.position.x) || !std::isfinite(p.position.y) ||
        !std::isfinite(p.position.z)) {
      fail(ErrorCode::Validation, std::string(which) + " pharmacophore " +
                                      std::to_string(p.id) +
                                      " has a non-finite position");
    }
  }
}

}  // namespace

void PharmacophoreInstance::validate() const {
  check_set(pocket, "pocket");
  check_set(ligand, "ligand");
  if (compat.size() != ligand.size()) {
    fail(ErrorCode::Validation,
         "compat has " + std::to_string(compat.size()) + " rows, expected " +
             std::to_string(ligand.size()) + " (one per ligand phc4)");
  }
  for (std::size_t i = 0; i < compat.size(); ++i) {
    if (compat[i].size() != pocket.size()) {
      fail(ErrorCode::Validation,
           "compat row " + std::to_string(i) + " has " +
               std::to_string(compat[i].size()) + " columns, expected " +
               std::to_string(pocket.size()));
    }
    for (std::size_t j = 0; j < compat[i].size(); ++j) {
      if (compat[i][j] && !kinds_compatible(ligand[i], pocket[j])) {
        fail(ErrorCode::Validation,
             "compat[" + std::to_string(i) + "][" + std::to_string(j) +
                 "] pairs mismatched kinds " + ligand[i].kind_string() +
                 " and " + pocket[j].kind_string());
      }
    }
  }
}

std::vector<std::vector<bool>> compat_from_kinds(
    const std::vector<Pharmacophore>& ligand,
    const std::vector<Pharmacophore>& pocket) {
  std::vector<std::vector<bool>> compat(ligand.size(),
                                        std::vector<bool>(pocket.size(), false));
  for (std::size_t i = 0; i < ligand.size(); ++i)
    for (std::size_t j = 0; j < pocket.size(); ++j)
      compat[i][j] = kinds_compatible(ligand[i], pocket[j]);
  return compat;
}

}  // namespace dockclique
