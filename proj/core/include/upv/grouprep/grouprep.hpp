// Copyright 2026 The upv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// The (Z/2)^6 action on P(1^8, 2^8), its subgroups G and H, the classes
// theta_i, linear fixed loci and point stabilizers.

#ifndef UPV_GROUPREP_GROUPREP_HPP_
#define UPV_GROUPREP_GROUPREP_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "upv/exactalg/poly.hpp"
#include "upv/report/report.hpp"

namespace upv::grouprep {

using alg::MonomialMap;
using alg::Poly;
using alg::Rational;

// Exponent vector in (Z/2)^6: bits 0..2 are alpha_1..alpha_3, bits 3..5 are
// beta_1..beta_3.
using Word = std::uint8_t;

constexpr Word alpha(int i) { return static_cast<Word>(1u << (i - 1)); }
constexpr Word beta(int i) { return static_cast<Word>(1u << (i + 2)); }

// "a1*b2" in fixed generator order; the identity prints as "1".
std::string word_string(Word w);
Word parse_word(const std::string& s);
int word_length(Word w);

struct SignedAction {
  Word word;
  MonomialMap<Rational> map;
  std::string name() const { return word_string(word); }
};

SignedAction action(Word w);
std::vector<SignedAction> generator_actions();

std::vector<Word> subgroup_g();
std::vector<Word> subgroup_h();
// The class of alpha_i beta_i modulo G, i = 1, 2, 3.
std::vector<Word> theta_class(int i);

enum class Sector { kPlusPlus, kMinusPlus, kZeroMinus };
std::string to_string(Sector s);

struct LinearFixedLocus {
  Word word;
  Sector sector;
  std::vector<Poly<Rational>> x_constraints;
  std::vector<Poly<Rational>> y_constraints;
};

// Linear conditions for g(P) = P with eigenvalue signs (eps_x, eps_y) on the
// weight-1 and weight-2 variables. Constraints are monic and deduplicated.
LinearFixedLocus fixed_locus(Word g, Sector sector);

// The multiples m with delta = m*i for which the (-,+) fixed locus of
// a1*a2*a3*b1*b2*b3 meets T.
std::vector<long long> degenerate_delta_multiples();

// A point of P(1^8, 2^8) over F_p in canonical form: the first nonzero x is
// 1; if all x vanish, the first nonzero y is 1 or the least non-residue.
struct WeightedPoint {
  std::vector<alg::Zp> c;
  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
  friend bool operator<(const WeightedPoint& a, const WeightedPoint& b) {
    for (std::size_t k = 0; k < a.c.size(); ++k) {
      if (a.c[k].value() != b.c[k].value()) return a.c[k].value() < b.c[k].value();
    }
    return false;
  }
  std::string to_string() const;
};

WeightedPoint canonical_point(const alg::PrimeField& f, std::vector<alg::Zp> coords);
WeightedPoint act(const alg::PrimeField& f, Word g, const WeightedPoint& p);

// For every word, the indices of points it fixes.
struct StabilizerData {
  std::vector<Word> words;
  std::vector<std::vector<std::size_t>> fixed;
};

StabilizerData stabilizer_classification(const alg::PrimeField& f,
                                         const std::vector<WeightedPoint>& points,
                                         const std::vector<Word>& words);

CheckReport check_generators();
CheckReport check_subgroups();
CheckReport check_regular_representation();
CheckReport check_fixed_loci();
CheckReport check_ideal_invariance();
CheckReport check_q_invariance(std::uint64_t seed);
CheckReport check_degenerate_delta();

}  // namespace upv::grouprep

#endif  // UPV_GROUPREP_GROUPREP_HPP_
