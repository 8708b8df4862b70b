// Copyright 2026 The Antimagic Authors
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

#ifndef ANTIMAGIC_ERROR_HPP
#define ANTIMAGIC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace antimagic {

enum class Errc {
  label_set_invalid,
  not_antimagic,
  not_strongly_antimagic,
  target_invalid,
  already_adjacent,
  empty_class,
  verification_failed,
  has_leaves,
  leaf_count_invalid,
  index_invalid,
  layout_invalid,
  shape_invalid,
  shape_mismatch,
  subcase_unmatched,
  not_reduced,
  residual_unsolved,
  budget_exceeded,
  oracle_guard,
  parse_error,
  internal,
};

std::string_view errc_name(Errc code);

/// Domain error carrying a typed code so callers (and the CLI exit-code
/// mapping) can dispatch without parsing message text.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace antimagic

#endif  // ANTIMAGIC_ERROR_HPP
