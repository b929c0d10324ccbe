#pragma once

#include <stdexcept>
#include <string>

namespace tangscope {

// Problems with input content: unreadable files, malformed records,
// unknown authors, bad gazetteer rows. The CLI maps these to exit code 2,
// as opposed to usage errors (std::invalid_argument) which map to 1.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class EncodingError : public DataError {
public:
    explicit EncodingError(const std::string& what) : DataError(what) {}
};

}  // namespace tangscope
