/*
 * Copyright 2026 The influrank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "influrank/textprep.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "influrank/error.h"

namespace influrank {

extern const char* const kBundledStopwords;

namespace {

// Decodes one code point starting at `i`; invalid bytes decode as Latin-1.
char32_t decode(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + static_cast<std::size_t>(extra) >= s.size()) {
    ++i;
    return b0;
  }
  for (int k = 1; k <= extra; ++k) {
    const auto b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += static_cast<std::size_t>(extra) + 1;
  return cp;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_space(char32_t c) {
  return c == ' ' || (c >= 0x09 && c <= 0x0D) || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200B) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000 || c == 0xFEFF;
}

bool is_alnum(char32_t c) {
  if (c < 0x80) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }
  if (c < 0xC0) return c == 0xAA || c == 0xB5 || c == 0xBA;
  if (c == 0xD7 || c == 0xF7) return false;
  if (c < 0x2000) return true;
  if (c < 0x2C00) return false;  // punctuation, symbols, arrows, dingbats
  if (c >= 0x2E00 && c < 0x2E80) return false;
  if (c >= 0x3000 && c < 0x3040) return false;
  if (c >= 0xFE00 && c < 0xFE10) return false;
  if (c >= 0xFE30 && c < 0xFE70) return false;
  if (c >= 0xFF00 && c < 0xFF10) return false;
  return c < 0x1F000;
}

char32_t to_lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  return c;
}

}  // namespace

StopwordSet::StopwordSet(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(std::move(w));
}

StopwordSet StopwordSet::from_text(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    std::string word;
    const std::string_view raw = std::string_view(line).substr(begin, end - begin + 1);
    for (std::size_t i = 0; i < raw.size();) encode(to_lower(decode(raw, i)), word);
    words.push_back(std::move(word));
  }
  return StopwordSet(std::move(words));
}

StopwordSet StopwordSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open stopword file {}", path.string()));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str());
}

const StopwordSet& StopwordSet::bundled() {
  static const StopwordSet set = from_text(kBundledStopwords);
  return set;
}

bool StopwordSet::contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

TokenStream tokenize(std::string_view text, const StopwordSet& stopwords,
                     const TokenizerOptions& options) {
  TokenStream tokens;
  std::vector<char32_t> token;
  std::string utf8;

  auto flush = [&] {
    if (token.empty()) return;
    const bool has_sigil = token.front() == '#' || token.front() == '@';
    std::size_t begin = 0;
    std::size_t end = token.size();
    while (begin < end && !is_alnum(token[begin])) ++begin;
    while (end > begin && !is_alnum(token[end - 1])) --end;
    const std::size_t length = end - begin;
    if ((has_sigil && !options.keep_mentions_and_hashtags) ||
        length < options.min_token_length || length == 0) {
      token.clear();
      return;
    }
    utf8.clear();
    for (std::size_t k = begin; k < end; ++k) encode(token[k], utf8);
    token.clear();
    if (utf8.starts_with("http") || stopwords.contains(utf8)) return;
    tokens.push_back(utf8);
  };

  for (std::size_t i = 0; i < text.size();) {
    const char32_t c = decode(text, i);
    if (is_space(c)) {
      flush();
    } else {
      token.push_back(to_lower(c));
    }
  }
  flush();
  return tokens;
}

std::vector<std::string_view> unique_tweet_texts(const UserProfile& user) {
  std::vector<std::string_view> texts;
  std::unordered_set<std::string_view> seen;
  for (const Tweet& t : user.tweets) {
    if (seen.insert(t.text).second) texts.push_back(t.text);
  }
  return texts;
}

std::vector<TokenStream> Tokenizer::user_streams(const UserProfile& user) const {
  std::vector<TokenStream> streams;
  for (std::string_view text : unique_tweet_texts(user)) streams.push_back((*this)(text));
  return streams;
}

}  // namespace influrank
