#pragma once

#include <stdexcept>
#include <string>

namespace seqmatch {

// Bad input from the caller: flags, query text, config values. CLI exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corpus, index or data-file problems. CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seqmatch
