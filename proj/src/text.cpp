#include "tangscope/text.hpp"

#include "tangscope/error.hpp"

#include <unicode/bytestream.h>
#include <unicode/normalizer2.h>
#include <unicode/stringpiece.h>

namespace tangscope {

bool is_cjk(char32_t cp) {
    return (cp >= 0x4E00 && cp <= 0x9FFF)       // unified ideographs
        || (cp >= 0x3400 && cp <= 0x4DBF)       // extension A
        || (cp >= 0xF900 && cp <= 0xFAFF)       // compatibility ideographs
        || cp == 0x3007                         // 〇
        || (cp >= 0x20000 && cp <= 0x2EBEF)     // extensions B-F
        || (cp >= 0x30000 && cp <= 0x3134A);    // extension G
}

bool is_line_delimiter(char32_t cp) {
    switch (cp) {
        case U'，': case U'。': case U'、': case U'；':
        case U'：': case U'？': case U'！':
            return true;
        default:
            return false;
    }
}

bool is_removable_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F:
        case 0x200B:            // zero width space
        case 0x3000:            // ideographic space
        case 0xFEFF:            // stray BOM / zero width no-break space
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

char32_t fold_halfwidth_punctuation(char32_t cp) {
    if (cp == U'.') return U'。';
    if (cp >= 0x21 && cp <= 0x7E) {
        bool alnum = (cp >= U'0' && cp <= U'9') || (cp >= U'A' && cp <= U'Z')
                  || (cp >= U'a' && cp <= U'z');
        if (!alnum) return cp - 0x21 + 0xFF01;
        return cp;
    }
    switch (cp) {
        case 0xFF61: return U'。';   // ｡
        case 0xFF62: return U'「';   // ｢
        case 0xFF63: return U'」';   // ｣
        case 0xFF64: return U'、';   // ､
        case 0xFF65: return U'・';   // ･
        default: return cp;
    }
}

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    const auto* p = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t i = 0, size = text.size();
    while (i < size) {
        unsigned char b0 = p[i];
        char32_t cp;
        std::size_t len;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            throw EncodingError("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > size)
            throw EncodingError("truncated UTF-8 sequence at offset " + std::to_string(i));
        for (std::size_t k = 1; k < len; ++k) {
            unsigned char b = p[i + k];
            if ((b & 0xC0) != 0x80)
                throw EncodingError("invalid UTF-8 continuation byte at offset " +
                                    std::to_string(i + k));
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMin[len])
            throw EncodingError("overlong UTF-8 sequence at offset " + std::to_string(i));
        if (cp >= 0xD800 && cp <= 0xDFFF)
            throw EncodingError("UTF-8 encoded surrogate at offset " + std::to_string(i));
        if (cp > 0x10FFFF)
            throw EncodingError("code point out of range at offset " + std::to_string(i));
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
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
    return out;
}

std::string encode_utf8(std::u32string_view text) {
    std::string out;
    out.reserve(text.size() * 3);
    for (char32_t cp : text) out += encode_utf8(cp);
    return out;
}

namespace {

std::string compose_nfc(std::string_view raw) {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status))
        throw std::runtime_error("ICU NFC instance unavailable");
    std::string out;
    icu::StringByteSink<std::string> sink(&out);
    nfc->normalizeUTF8(0, icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())),
                       sink, nullptr, status);
    if (U_FAILURE(status))
        throw EncodingError("input is not valid UTF-8");
    return out;
}

}  // namespace

std::u32string normalize_to_codepoints(std::string_view raw) {
    // Validate first: ICU would substitute U+FFFD instead of rejecting.
    (void)decode_utf8(raw);
    std::u32string composed = decode_utf8(compose_nfc(raw));
    std::u32string out;
    out.reserve(composed.size());
    for (char32_t cp : composed) {
        if (is_removable_space(cp)) continue;
        out.push_back(fold_halfwidth_punctuation(cp));
    }
    return out;
}

std::string normalize_text(std::string_view raw) {
    return encode_utf8(normalize_to_codepoints(raw));
}

bool all_cjk(std::u32string_view chars) {
    for (char32_t cp : chars)
        if (!is_cjk(cp)) return false;
    return true;
}

}  // namespace tangscope
