#pragma once

#include <string>
#include <vector>

namespace uqp {

// Global registry of commuting scalar variables.  Fixed slots cover the
// current variables (z, z1..z4, w), the q-lattice generator v = q^{1/6},
// the central-charge units u = q^{c/2} and their tensor-leg copies
// u1, u2, u3 (= q^{c_k/2}).  Further ids are handed out on demand for
// opaque structure-function symbols.
namespace vars {

enum : int {
	Z = 0,
	Z1,
	Z2,
	Z3,
	Z4,
	W,
	V,  // q^{1/6}
	U,  // q^{c/2}
	U1, // q^{c_1/2}
	U2, // q^{c_2/2}
	U3, // q^{c_3/2}
	FIRST_DYNAMIC
};

// Returns the id for `name`, registering it if unseen.  Thread-safe.
int id_of(const std::string& name);

// Name for an id (must exist).
std::string name_of(int id);

// All currently registered ids (size of table).
int count();

// Ids of the current-variable slots in canonical label order.
const std::vector<int>& current_labels();

} // namespace vars

} // namespace uqp
