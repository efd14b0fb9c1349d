#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "affhom/homothety.hpp"
#include "affhom/parse.hpp"
#include "affhom/spec.hpp"

namespace testing_support {

using namespace affhom;

inline Scalar S(const std::string& s) { return parse_scalar(s); }

inline Point P(std::initializer_list<const char*> xs)
{
    Point p;
    for (const char* x : xs) p.push_back(parse_scalar(x));
    return p;
}

inline Homothety hom(const std::string& ratio, std::initializer_list<const char*> center)
{
    return Homothety::from_center(parse_scalar(ratio), P(center));
}

inline Homothety trans(std::initializer_list<const char*> v) { return Homothety::translation(P(v)); }

inline GroupSpec group(std::size_t n, std::vector<Homothety> gens, Options o = {}) { return GroupSpec(n, std::move(gens), o); }

inline CycloScalar C(const std::string& s) { return parse_scalar(s).exact(); }

} // namespace testing_support
