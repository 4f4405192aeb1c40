#include "partcat/cli/vector_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "partcat/errors.hpp"

namespace partcat::cli {
namespace {

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

VectorInput parse_vector_text(std::string_view text) {
  std::vector<std::string> entries;
  std::optional<std::string> label;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      std::string comment = trimmed(body.substr(hash + 1));
      if (comment.rfind("label:", 0) == 0) label = trimmed(std::string_view(comment).substr(6));
      body = body.substr(0, hash);
    }
    std::string value = trimmed(body);
    if (!value.empty()) entries.push_back(std::move(value));
  }
  if (entries.empty()) throw ParseError("vector file has no components");
  return {ProbVec::parse(entries), label, "file"};
}

VectorInput parse_inline_vector(std::string_view text) {
  std::vector<std::string> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string value = trimmed(text.substr(pos, comma - pos));
    if (value.empty()) throw ParseError("empty component in '" + std::string(text) + "'");
    entries.push_back(std::move(value));
    pos = comma + 1;
  }
  return {ProbVec::parse(entries), std::nullopt, "inline"};
}

VectorInput load_vector(std::string_view arg, bool allow_unnormalized) {
  VectorInput in;
  std::error_code ec;
  const std::filesystem::path path{std::string(arg)};
  if (std::filesystem::is_regular_file(path, ec)) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path.string());
    std::stringstream buf;
    buf << f.rdbuf();
    in = parse_vector_text(buf.str());
    in.source = path.string();
  } else {
    in = parse_inline_vector(arg);
  }
  if (!in.vec.normalized()) {
    if (!allow_unnormalized) {
      throw ParseError("vector " + std::string(arg) + " sums to " + to_fraction_string(in.vec.total()) +
                       ", not 1 (pass --unnormalized to rescale)");
    }
    if (sgn(in.vec.total()) == 0) throw ParseError("vector " + std::string(arg) + " is zero");
    in.vec = in.vec.normalize();
  }
  return in;
}

}  // namespace partcat::cli
