// Copyright 2026 The wml Authors.
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
#ifndef WML_BUILTIN_GROUPS_HPP_
#define WML_BUILTIN_GROUPS_HPP_

#include <string>
#include <vector>

#include "wml/class_function.hpp"

namespace wml {

// Z/m with characters chi0..chi{m-1}, chi_j(g^k) = zeta_m^{jk}. Alias
// "trivial"; "sign" for m = 2.
CharacterTable cyclic_group(int m);

// S_n for 1 <= n <= 5 acting on {0..n-1}; element products apply the left
// factor first. Characters are named by partitions, e.g. "[2,1]", with
// aliases "trivial", "sign" and "std" = [n-1,1].
CharacterTable symmetric_group(int n);

// Dihedral group of order 2m (symmetries of the m-gon), m >= 2. Characters
// "trivial", "lin1" (r -> 1, s -> -1), for even m also "lin2" (r -> -1,
// s -> 1) and "lin3" (r -> -1, s -> -1), and the 2-dimensional "rho1",
// "rho2", ...
CharacterTable dihedral_group(int m);

// Q_8 with characters "trivial", "chi_i", "chi_j", "chi_k" (trivial on the
// named generator) and the quaternionic 2-dimensional "rho".
CharacterTable quaternion_group();

CharacterTable trivial_group();

// Accepts C<m>/cyclic(m), S<n>/symmetric(n), D<m>/dihedral(m),
// Q8/quaternion8 and trivial. Throws ValidationError otherwise.
CharacterTable builtin_group(const std::string& name);

// Permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

// Murnaghan-Nakayama: chi^lambda on the class of cycle type mu.
Integer symmetric_character(const std::vector<int>& lambda,
                            const std::vector<int>& mu);

}  // namespace wml

#endif  // WML_BUILTIN_GROUPS_HPP_
