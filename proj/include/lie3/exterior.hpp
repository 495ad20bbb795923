#pragma once

#include "lie3/coeff.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lie3 {

/// A word in the basis letters of V, as 1-based indices in [1, d].
using Sequence = std::vector<int>;
using SeqComb = std::map<Sequence, CycQ>;

/// Position of the leftmost window of n consecutive non-decreasing letters.
std::optional<std::size_t> first_rise(std::span<const int> s, int n);

/// True iff s contains n consecutive non-decreasing letters.
bool has_rise(std::span<const int> s, int n);

/// All length-k sequences over [1, d] without a rise of length n, in
/// lexicographic order (Roby's basis of the degree-k part of Lambda(V, n)).
std::vector<Sequence> roby_basis(int d, int n, int k);

/// |roby_basis(d, n, k)|, counted without enumeration.
mpz_class roby_dim(int d, int n, int k);

/// One rewrite of the symmetrizer relation on the window s[pos, pos+n),
/// which must be non-decreasing: the window is replaced by minus the sum
/// of its other distinct rearrangements (each rearrangement occurs equally
/// often in the full symmetrizer). A constant window maps to 0.
SeqComb rewrite_rise(const Sequence& s, std::size_t pos, int n);

/// Image of s in Lambda(V, n) expressed in the Roby basis, rewriting the
/// leftmost rise first.
///
/// Terminates: every replacement word is a rearrangement of the window that
/// is lexicographically larger than the non-decreasing window itself, so each
/// step moves strictly up the finite lex chain of words with the same letters.
SeqComb reduce_pure(const Sequence& s, int n);

}  // namespace lie3
