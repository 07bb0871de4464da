#pragma once

// Independent reference computations. None of these call into the code they
// are used to check; they are slow and only meant for small inputs.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "apt/arith.hpp"
#include "apt/classgroup.hpp"

namespace oracle {

using apt::Int;

bool is_prime_naive(std::int64_t n);
bool is_square_free_naive(std::int64_t n);

/// Smallest r in [0, p) with r^2 = a (mod p), by scanning.
std::optional<std::int64_t> sqrt_mod_scan(std::int64_t a, std::int64_t p);

/// Euler's criterion for odd p, and the mod-8 rule for 2; m < 0 allowed.
int legendre_euler(std::int64_t minus_m, std::int64_t p);

/// Some SL2(Z) matrix with entries in [-r, r] taking f to g, if any.
bool sl2_equivalent_small(const apt::QuadForm& f, const apt::QuadForm& g, int r);

/// Reduced primitive forms of discriminant d by scanning a, b, c boxes.
std::vector<apt::QuadForm> reduced_forms_scan(std::int64_t d);

/// Form of the primitive part of the product of the ideals of f and g,
/// computed via the Hermite normal form of the product lattice.
apt::QuadForm ideal_product_hnf(const apt::QuadForm& f, const apt::QuadForm& g);

/// Multiset of element orders of Z/n1 x ... x Z/nk.
std::vector<std::size_t> order_histogram_of_product(const std::vector<std::size_t>& cyclic_orders);

/// Coprime (u, v >= 0) with u^2 + m v^2 = n, by scanning u instead of v.
std::vector<std::pair<Int, Int>> norm_solutions_scan_u(std::int64_t m, const Int& n);

/// Triple with the smallest a/c among all primitive solutions with c = n or
/// c = 2n (positive entries); the independent definition of beta.
std::optional<std::pair<Int, std::pair<Int, Int>>> min_u_triple(std::int64_t m, const Int& n);

/// a^2 + m b^2 = c^2 and gcd = 1.
bool is_primitive_solution(std::int64_t m, const Int& a, const Int& b, const Int& c);

}  // namespace oracle
