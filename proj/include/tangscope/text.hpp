#pragma once

#include <string>
#include <string_view>

namespace tangscope {

// One CJK unified ideograph (URO, extensions, compatibility block).
bool is_cjk(char32_t cp);

// Sentence-ending marks recognized after normalization:
// ， 。 、 ； ： ？ ！
bool is_line_delimiter(char32_t cp);

// Whitespace and format characters dropped by normalize_text.
bool is_removable_space(char32_t cp);

// Half-width punctuation -> full-width equivalent ('.' -> 。, ',' -> ，).
// Letters, digits and everything else pass through unchanged.
char32_t fold_halfwidth_punctuation(char32_t cp);

// Strict UTF-8 conversion. decode_utf8 throws EncodingError on malformed
// sequences (truncation, overlongs, surrogates, out-of-range values).
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t cp);

// Canonical composition (NFC), whitespace removal, half-width punctuation
// folding. Character variants are never unified: 牀 stays 牀.
std::string normalize_text(std::string_view raw);
std::u32string normalize_to_codepoints(std::string_view raw);

bool all_cjk(std::u32string_view chars);

}  // namespace tangscope
