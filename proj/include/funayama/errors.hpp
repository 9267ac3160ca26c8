#pragma once

#include <stdexcept>
#include <string>

namespace funayama {

enum class Errc {
  duplicate_name,
  unknown_element,
  cycle_detected,
  not_bounded,
  degenerate_poset,
  unknown_pair,
  capacity_exceeded,
  foreign_element,
  not_a_lattice,
  unknown_name,
  syntax_error,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

  // Pipeline stage that raised the error, when known (set by analyze()).
  const std::string& stage() const { return stage_; }
  void set_stage(std::string s) { stage_ = std::move(s); }

 private:
  Errc code_;
  std::string stage_;
};

[[noreturn]] inline void raise(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace funayama
