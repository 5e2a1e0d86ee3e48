#pragma once

#include <stdexcept>
#include <string>

namespace sbe {

// Status codes shared with the C API (socbusenc.h mirrors these values).
enum class Err : int {
  Ok = 0,
  ParamSize = 1,   // key/IV/tag size does not match the cipher
  Sequence = 2,    // operation out of order (e.g. keystream before init)
  Mode = 3,        // operation not available in this cipher mode
  Length = 4,      // buffer length mismatch or oversize payload
  Exhausted = 5,   // counter or keystream budget used up, re-key required
  Replay = 6,      // frame counter reuse or reorder
  AuthFail = 7,    // MAC verification failed
  Routing = 8,     // unknown session / endpoint / link
  Config = 9,      // invalid partition or simulator configuration
  Parse = 10,      // malformed input file or script line
  Io = 11,         // file I/O failure
  Coverage = 12,   // benchmark comparison input incomplete
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

}  // namespace sbe
