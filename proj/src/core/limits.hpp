#pragma once

namespace dockclique {

/// Largest qubit count the dense representations (cost diagonal, statevector)
/// will allocate. Defaults to 26 (a 2^26 statevector is 1 GiB); the
/// DOCKCLIQUE_QUBIT_CAP environment variable overrides it. Read once per
/// process.
int qubit_cap();

}  // namespace dockclique
