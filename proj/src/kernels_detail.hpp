#pragma once

#include "ua/casebook.hpp"
#include "ua/powers.hpp"

namespace ua::kernels {

// Every nonempty format block of x is a member of `field`.
bool field_admits(FieldOfSets const& field, Tuple const& x, std::size_t carrier);

}  // namespace ua::kernels
