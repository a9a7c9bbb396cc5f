#include "goeritz/straighten.hpp"

namespace goeritz::numerics {

template struct BumpProfile<double>;
template struct KappaProfile<double>;

}  // namespace goeritz::numerics
