#pragma once

#include <stdexcept>
#include <string>

namespace musicdet {

// Every rejected input or runtime fault carries one of these codes so callers
// (and tests) can distinguish failure modes without parsing message text.
enum class ErrorCode {
    invalid_argument,
    shape_mismatch,
    domain_error,         // log of non-positive, division by zero
    numeric_nonfinite,    // an op produced NaN/Inf from finite inputs
    io_error,
    wav_malformed_header,
    wav_unsupported_encoding,
    wav_truncated_data,
    ckpt_bad_magic,
    ckpt_version_mismatch,
    ckpt_truncated,
    ckpt_tensor_mismatch,
    manifest_error,
    single_label,         // metric requested on records with only one label
    mode_label_mismatch,  // training mode and per-sample labels disagree
};

class MdError : public std::runtime_error {
  public:
    MdError(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &msg) {
    throw MdError(code, msg);
}

}  // namespace musicdet
