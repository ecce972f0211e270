#pragma once

#include <string>
#include <vector>

#include "torat/tori.hpp"

namespace torat {

// Small groups addressable by name: c1..c12, klein4, c2xc4, c2xc2xc2, d4, q8,
// c3xc3, s3, a4, plus the order-36 stretch group c2xc2xc3xc3. Each call
// builds a fresh group object.
GroupPtr group_by_name(const std::string& name);

// Census roster, sorted by order then name. Stops at order 12.
std::vector<std::string> catalog_group_names();

std::string stretch_group_name();

// Named torus constructions: "norm_one:<group>" and "theorem13:{p,q,...}".
Torus torus_by_name(const std::string& name);

}  // namespace torat
