#pragma once

#include <stdexcept>
#include <string>

namespace linstrand {

/// Malformed instance data or parameters. Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Arithmetic between scalars or polynomials over different fields.
class FieldMismatch : public std::logic_error {
public:
  explicit FieldMismatch(const std::string& what) : std::logic_error(what) {}
};

/// A linear-algebra piece exceeded the configured entry cap. Maps to CLI exit code 3.
class ResourceCapExceeded : public std::runtime_error {
public:
  ResourceCapExceeded(const std::string& where, std::size_t entries, std::size_t cap)
      : std::runtime_error(where + ": " + std::to_string(entries) + " nonzero entries exceed cap " +
                           std::to_string(cap)),
        entries_(entries), cap_(cap) {}

  std::size_t entries() const noexcept { return entries_; }
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t entries_;
  std::size_t cap_;
};

}  // namespace linstrand
