#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "partcat/prob_vec.hpp"

namespace partcat::cli {

struct VectorInput {
  ProbVec vec;  // normalized, in the order given
  std::optional<std::string> label;
  std::string source;  // file path or "inline"
};

/// Vector file body: one component per line (decimal or p/q), blank lines
/// ignored, '#' starts a comment, and "# label: NAME" names the vector.
VectorInput parse_vector_text(std::string_view text);

/// "0.6,0.2,0.2" or "3/5, 1/5, 1/5".
VectorInput parse_inline_vector(std::string_view text);

/// Reads `arg` as a file when one exists at that path, otherwise as an
/// inline list. Unnormalized input is rescaled when `allow_unnormalized`,
/// rejected otherwise.
VectorInput load_vector(std::string_view arg, bool allow_unnormalized);

}  // namespace partcat::cli
