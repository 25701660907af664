#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

FiniteGroup cyclic_group(std::size_t n, const Limits& limits = {});

// Dihedral group of the given order (2k), as permutations of a k-gon.
FiniteGroup dihedral_group(std::size_t order, const Limits& limits = {});

FiniteGroup quaternion_group(const Limits& limits = {});

// Extraspecial group of order p^3 and exponent p (p odd): the Heisenberg
// group of unitriangular 3x3 matrices over GF(p).
FiniteGroup extraspecial_group(unsigned p, const Limits& limits = {});

// (C_p)^q extended by the cyclic shift of coordinates. p need not be prime.
FiniteGroup wreath_cyclic(std::size_t p, std::size_t q, const Limits& limits = {});

// Elements are pairs (a, b) enumerated as a * |b| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits = {});

// action[h][x] is the image of x in n under the automorphism attached to h.
using Automorphism = std::vector<Elem>;
using Action = std::vector<Automorphism>;

// (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2), enumerated as n * |h| + h.
// Throws NotAutomorphism or NotHomomorphism.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const Action& action,
                               const Limits& limits = {});

// Extends automorphisms given on some elements of h (which must generate h)
// to a full action. Throws NotHomomorphism on an inconsistent assignment.
Action extend_action(const FiniteGroup& n, const FiniteGroup& h,
                     const std::vector<std::pair<Elem, Automorphism>>& images);

}  // namespace lienil
