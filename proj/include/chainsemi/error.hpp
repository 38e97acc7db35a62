#ifndef CHAINSEMI_ERROR_HPP_
#define CHAINSEMI_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace chainsemi {

// Every failure mode the library can signal. The CLI maps budget_exceeded
// to exit code 3 and io_error to exit code 4.
enum class errc {
  out_of_range,
  duplicate_point,
  size_mismatch,
  empty_domain,
  id_out_of_range,
  budget_exceeded,
  family_unsupported,
  not_member,
  height_too_small,
  not_idempotent,
  not_strongly_regular,
  hypothesis_not_met,
  io_error,
  config_invalid,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace chainsemi

#endif  // CHAINSEMI_ERROR_HPP_
