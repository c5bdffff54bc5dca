#pragma once

#include <stdexcept>
#include <string>

namespace nivat {

enum class Errc {
  invalid_argument,
  bad_spec,
  ragged_rows,
  empty_input,
  io_error,
  out_of_window,
  shape_too_large,
  degenerate_set,
  empty_border,
  no_such_subset,
  hypothesis_fails,
  frame_too_large,
  hypothesis_violation,
  internal,
};

/// Library error: a machine-readable code plus a human-readable message.
struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::bad_spec: return "bad_spec";
    case Errc::ragged_rows: return "ragged_rows";
    case Errc::empty_input: return "empty_input";
    case Errc::io_error: return "io_error";
    case Errc::out_of_window: return "out_of_window";
    case Errc::shape_too_large: return "shape_too_large";
    case Errc::degenerate_set: return "degenerate_set";
    case Errc::empty_border: return "empty_border";
    case Errc::no_such_subset: return "no_such_subset";
    case Errc::hypothesis_fails: return "hypothesis_fails";
    case Errc::frame_too_large: return "frame_too_large";
    case Errc::hypothesis_violation: return "hypothesis_violation";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace nivat
