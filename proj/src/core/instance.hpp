#pragma once

#include <string>
#include <vector>

namespace dockclique {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double distance(const Vec3& a, const Vec3& b);

/// Interaction type of a pharmacophore point. `Other` carries a free-form tag
/// so uncommon feature classes (metal coordination, halogen bonds, ...) can
/// still be matched by name.
enum class PharmKind {
  Hydrophobic,
  HBondDonor,
  HBondAcceptor,
  Aromatic,
  Other,
};

std::string kind_name(PharmKind kind);

/// Parses a kind string as written in instance files. The four named kinds
/// are "hydrophobic", "donor", "acceptor" and "aromatic"; anything else is
/// treated as an Other kind tagged with the raw string.
PharmKind parse_kind(const std::string& text, std::string* tag_out);

/// One abstracted interaction feature point with a 3-D position in angstrom.
struct Pharmacophore {
  int id = 0;
  PharmKind kind = PharmKind::Other;
  std::string tag;  // only meaningful for PharmKind::Other
  Vec3 position;

  /// The string form used in files: the canonical kind name, or the tag.
  std::string kind_string() const;
};

/// Same-type matching rule: kinds must be equal, and Other kinds additionally
/// need equal tags.
bool kinds_compatible(const Pharmacophore& a, const Pharmacophore& b);

/// A docking problem input: pocket and ligand pharmacophore sets plus the
/// |ligand| x |pocket| compatibility matrix saying which pairs may overlap.
struct PharmacophoreInstance {
  std::vector<Pharmacophore> pocket;
  std::vector<Pharmacophore> ligand;
  std::vector<std::vector<bool>> compat;  // compat[ligand][pocket]

  /// Throws Error(Validation) on duplicate ids, non-finite positions,
  /// dimension mismatches, or compat entries that violate the type rule.
  void validate() const;
};

/// Builds the full compatibility matrix from the same-type rule.
std::vector<std::vector<bool>> compat_from_kinds(
    const std::vector<Pharmacophore>& ligand,
    const std::vector<Pharmacophore>& pocket);

}  // namespace dockclique
