#include "torat/catalog.hpp"

#include <cctype>

namespace torat {

namespace {

// Identity on [0, degree) with one cycle of the given length spliced in.
Permutation cycle(std::size_t degree, std::size_t base, std::size_t len) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = i;
  for (std::size_t i = 0; i < len; ++i) p[base + i] = base + (i + 1) % len;
  return p;
}

}  // namespace

GroupPtr group_by_name(const std::string& name) {
  for (std::size_t n = 1; n <= 12; ++n)
    if (name == "c" + std::to_string(n))
      return FiniteGroup::from_generators({cycle(n, 0, n)}, name);
  if (name == "klein4")
    return FiniteGroup::from_generators({cycle(4, 0, 2), cycle(4, 2, 2)},
                                        name);
  if (name == "c2xc4")
    return FiniteGroup::from_generators({cycle(6, 0, 2), cycle(6, 2, 4)},
                                        name);
  if (name == "c2xc2xc2")
    return FiniteGroup::from_generators(
        {cycle(6, 0, 2), cycle(6, 2, 2), cycle(6, 4, 2)}, name);
  if (name == "d4")
    return FiniteGroup::from_generators({{1, 2, 3, 0}, {3, 2, 1, 0}}, name);
  if (name == "q8")
    // Left multiplication by i and j on {1,-1,i,-i,j,-j,k,-k}.
    return FiniteGroup::from_generators(
        {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}, name);
  if (name == "c3xc3")
    return FiniteGroup::from_generators({cycle(6, 0, 3), cycle(6, 3, 3)},
                                        name);
  if (name == "s3")
    return FiniteGroup::from_generators({{1, 0, 2}, {1, 2, 0}}, name);
  if (name == "a4")
    return FiniteGroup::from_generators({{1, 2, 0, 3}, {1, 0, 3, 2}}, name);
  if (name == "c2xc2xc3xc3")
    return FiniteGroup::from_generators(
        {cycle(10, 0, 2), cycle(10, 2, 2), cycle(10, 4, 3), cycle(10, 7, 3)},
        name, 36);
  throw parse_error("unknown group name: " + name);
}

std::vector<std::string> catalog_group_names() {
  return {"c1", "c2", "c3",       "c4",    "klein4", "c5", "c6",
          "s3", "c7", "c2xc2xc2", "c2xc4", "c8",     "d4", "q8",
          "c3xc3", "c9", "c10", "c11", "a4", "c12"};
}

std::string stretch_group_name() { return "c2xc2xc3xc3"; }

Torus torus_by_name(const std::string& name) {
  const std::string norm_prefix = "norm_one:";
  const std::string thm_prefix = "theorem13:";
  if (name.rfind(norm_prefix, 0) == 0)
    return norm_one_torus(group_by_name(name.substr(norm_prefix.size())));
  if (name.rfind(thm_prefix, 0) == 0) {
    std::string rest = name.substr(thm_prefix.size());
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
      throw parse_error(
          "theorem13 takes a braced prime list, e.g. theorem13:{2,3}");
    std::vector<Int> ps;
    std::string body = rest.substr(1, rest.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::size_t end = comma == std::string::npos ? body.size() : comma;
      std::string tok = body.substr(pos, end - pos);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
        tok.erase(tok.begin());
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
        tok.pop_back();
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad prime token in " + name);
      ps.emplace_back(tok);
      pos = end + (comma == std::string::npos ? 0 : 1);
      if (comma == std::string::npos) break;
    }
    return theorem13_torus(ps);
  }
  throw parse_error("unknown torus name: " + name);
}

}  // namespace torat
