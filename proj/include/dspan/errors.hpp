#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dspan {

// Root of everything the library rejects.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Construction-time violations: base < 2, negative multiplicity.
class invalid_collection : public error {
 public:
  using error::error;
};

// Operations that require both collections to share a base.
class base_mismatch : public error {
 public:
  using error::error;
};

// Elementary exchange attempted at a place holding fewer than d tokens.
class invalid_exchange : public error {
 public:
  using error::error;
};

// Decomposition requested for a collection that is not normal.
class not_normal : public error {
 public:
  using error::error;
};

// Decomposition requested for the empty collection.
class empty_collection : public error {
 public:
  using error::error;
};

// Oracle refused a collection whose sum exceeds the configured bound.
class oracle_bound_exceeded : public error {
 public:
  using error::error;
};

// Bad argument value (e.g. enumeration limit of zero).
class invalid_argument : public error {
 public:
  using error::error;
};

// Collection literal scanner failure; position is the 1-based offset of the
// offending character in the input text.
class parse_error : public error {
 public:
  parse_error(const std::string& message, std::size_t position)
      : error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dspan
