#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace deltaring {

enum class errc {
  dimension_mismatch,
  cap_exceeded,
  not_a_unit,
  bad_presentation,
  unknown_identifier,
  non_monic_relation,
  missing_modulus,
  syntax,
  cyclic_quiver,
  unsupported,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::cap_exceeded: return "cap exceeded";
    case errc::not_a_unit: return "not a unit";
    case errc::bad_presentation: return "bad presentation";
    case errc::unknown_identifier: return "unknown identifier";
    case errc::non_monic_relation: return "non-monic relation";
    case errc::missing_modulus: return "missing modulus";
    case errc::syntax: return "syntax error";
    case errc::cyclic_quiver: return "cyclic quiver";
    case errc::unsupported: return "unsupported";
    case errc::internal: return "internal error";
  }
  return "error";
}

class ring_error : public std::runtime_error {
 public:
  ring_error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Enumeration refused; carries the exact size that broke the cap.
class cap_error : public ring_error {
 public:
  cap_error(const std::string& what_is_big, const std::string& exact_size, uint64_t cap)
      : ring_error(errc::cap_exceeded,
                   what_is_big + " has " + exact_size + " elements, cap is " + std::to_string(cap)),
        size_text_(exact_size),
        cap_(cap) {}
  const std::string& exact_size() const { return size_text_; }
  uint64_t cap() const { return cap_; }

 private:
  std::string size_text_;
  uint64_t cap_;
};

// Text-input failure; offset is a 0-based byte position into the input.
class parse_error : public ring_error {
 public:
  parse_error(errc code, size_t offset, const std::string& msg)
      : ring_error(code, "at byte " + std::to_string(offset) + ": " + msg), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

}  // namespace deltaring
