// Word-list files: one word per line, `@eps` for the empty word, `#` comments.
#pragma once

#include <string>
#include <string_view>

#include "gsa/core.hpp"
#include "gsa/parse_error.hpp"

namespace gsa {

FiniteLanguage parse_word_list(std::string_view text, const std::string& source = "<input>");
std::string format_word_list(const FiniteLanguage& lang);

/// 64-bit FNV-1a of `bytes`, rendered as 16 hex digits. Used to tag emitted
/// artifacts with their inputs.
std::string content_digest(std::string_view bytes);

std::string read_file(const std::string& path);

}  // namespace gsa
