#include "core/limits.hpp"

#include <cstdlib>
#include <string>

namespace dockclique {

namespace {

int read_cap() {
  const char* raw = std::getenv("DOCKCLIQUE_QUBIT_CAP");
  if (raw == nullptr) return 26;
  try {
    int cap = std::stoi(raw);
    if (cap >= 1 && cap <= 34) return cap;
  } catch (...) {
  }
  return 26;
}

}  // namespace

int qubit_cap() {
  static const int cap = read_cap();
  return cap;
}

}  // namespace dockclique
