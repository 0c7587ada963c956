#include "kmloop/dual.hpp"

#include <ostream>

namespace kmloop {

std::ostream& operator<<(std::ostream& os, const DualNumber& x) { return os << x.to_string(); }

}  // namespace kmloop
