#pragma once

#include <stdexcept>
#include <string>

namespace causalfair {

// Every failure mode the library reports. The CLI maps kinds onto exit
// codes: input-format problems -> 2, precondition violations -> 3,
// internal guards -> 4.
enum class ErrorKind {
  parse,
  duplicate_adjacency,
  self_loop,
  invalid_token,
  unknown_node,
  invalid_path,
  not_a_dag,
  inconsistent_orientation,
  construct_fail,
  too_large,
  same_node,
  root_assumption_violated,
  missing_graph,
  schema_mismatch,
  no_noise_retained,
  too_many_edges,
  bad_config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  int exit_code() const {
    switch (kind_) {
      case ErrorKind::parse:
      case ErrorKind::duplicate_adjacency:
      case ErrorKind::self_loop:
      case ErrorKind::invalid_token:
      case ErrorKind::bad_config:
        return 2;
      case ErrorKind::too_large:
        return 4;
      default:
        return 3;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace causalfair
