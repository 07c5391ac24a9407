// Copyright 2026 The latfix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hand-built lattices and correspondences shared by the test suites.

#ifndef LATFIX_TESTS_FIXTURES_HPP
#define LATFIX_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "latfix/correspondence.hpp"
#include "latfix/lattice.hpp"

namespace latfix::testing {

// 0 <= a, b <= 1 with a, b incomparable.
inline LatticePtr diamond() {
  return make_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

// 0 <= a, b <= 1 < 2.
inline LatticePtr pentagon_like() {
  return make_lattice({"0", "a", "b", "1", "2"},
                      {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}, {"1", "2"}});
}

inline LatticePtr chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return make_lattice(names, pairs);
}

// The classic non-distributive pentagon N5: 0 < x < y < 1, 0 < z < 1.
inline LatticePtr n5() {
  return make_lattice({"0", "x", "y", "z", "1"},
                      {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}});
}

// M3: 0 < p, q, r < 1.
inline LatticePtr m3() {
  return make_lattice({"0", "p", "q", "r", "1"},
                      {{"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

// 2 x 3 grid, elements "ij".
inline LatticePtr grid23() {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      names.push_back(std::to_string(i) + std::to_string(j));
      if (i > 0) pairs.emplace_back(std::to_string(i - 1) + std::to_string(j), names.back());
      if (j > 0) pairs.emplace_back(std::to_string(i) + std::to_string(j - 1), names.back());
    }
  }
  return make_lattice(names, pairs);
}

// F(0)={0}, F(1)={1}, F(a)=F(b)={a,b} on the diamond.
inline Correspondence diamond_example() {
  return Correspondence::from_names(
      diamond(), {{"0", {"0"}}, {"a", {"a", "b"}}, {"b", {"a", "b"}}, {"1", {"1"}}});
}

// F(0)={0}, F(a)=F(b)={0,a,b,2}, F(1)={1,2}, F(2)={2} on the pentagon-like lattice.
inline Correspondence pentagon_example() {
  return Correspondence::from_names(pentagon_like(), {{"0", {"0"}},
                                                      {"a", {"0", "a", "b", "2"}},
                                                      {"b", {"0", "a", "b", "2"}},
                                                      {"1", {"1", "2"}},
                                                      {"2", {"2"}}});
}

// pentagon_example with F(1)={2}: V-ascending, and Fix = {0,a,b,2} is not a
// sublattice.
inline Correspondence pentagon_repaired() {
  return Correspondence::from_names(pentagon_like(), {{"0", {"0"}},
                                                      {"a", {"0", "a", "b", "2"}},
                                                      {"b", {"0", "a", "b", "2"}},
                                                      {"1", {"2"}},
                                                      {"2", {"2"}}});
}

// F(0)={1}, F(1)={0}: no fixed point.
inline Correspondence two_chain_swap() {
  return Correspondence::from_names(chain(2), {{"0", {"1"}}, {"1", {"0"}}});
}

inline Correspondence identity(const LatticePtr& lat) {
  std::vector<ElemSet> values;
  for (Elem x = 0; x < lat->size(); ++x) values.push_back(ElemSet(lat->size(), {x}));
  return Correspondence(lat, values);
}

inline Correspondence constant(const LatticePtr& lat, const ElemSet& value) {
  return Correspondence(lat, std::vector<ElemSet>(lat->size(), value));
}

inline std::vector<LatticePtr> curated_lattices() {
  return {chain(1), chain(2), chain(3), chain(4), diamond(), pentagon_like(), n5(), m3(),
          grid23()};
}

}  // namespace latfix::testing

#endif  // LATFIX_TESTS_FIXTURES_HPP
