#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace crowdqa {

// Fatal error while scanning a dump; carries the byte offset of the
// offending construct.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  size_t byte_offset() const { return byte_offset_; }

 private:
  size_t byte_offset_;
};

// Checkpoint/tokenizer pairing violation. The CLI maps this to its own
// exit code, so it must stay distinguishable from plain runtime errors.
class FingerprintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace text {

// Decodes HTML/XML character references in a single left-to-right pass:
// the five named entities plus &#NNN; and &#xHH;. Unknown or malformed
// references are kept literally.
std::string decode_entities(std::string_view in);

// Escapes a free-text field for the tab-separated pair archive:
// backslash, tab, CR and LF become \\, \t, \r, \n.
std::string escape_tsv_field(std::string_view in);
std::string unescape_tsv_field(std::string_view in);

// Replaces byte sequences that are not valid UTF-8 with U+FFFD. Used only
// when rendering model output; archive/corpus paths keep raw bytes.
std::string sanitize_utf8(std::string_view in);

// Case-insensitive whole-word match, word characters being ASCII letters.
bool contains_word_nocase(std::string_view haystack, std::string_view word);

uint64_t fnv1a64(std::string_view data);

}  // namespace text
}  // namespace crowdqa
