#pragma once

#include <stdexcept>
#include <stop_token>

namespace cayci {

/// Thrown by long enumerations when their stop token is triggered.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("operation cancelled") {}
};

inline void throw_if_stopped(const std::stop_token& token) {
  if (token.stop_requested()) throw Cancelled();
}

}  // namespace cayci
