#include "bench/kat.hpp"

#include <fstream>
#include <sstream>

#include "cipher/cipher.hpp"
#include "core/error.hpp"
#include "core/hex.hpp"

namespace sbe {
namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Err::Parse, "line " + std::to_string(line) + ": " + what);
}

// Keystream bits [offset, offset + 8 * nbytes) repacked into bytes. Offsets
// need not be byte aligned.
std::vector<std::uint8_t> keystream_at_offset(const KatVector& v, std::size_t nbytes) {
  StreamCipher cipher(v.cipher, v.radix,
                      v.cipher == CipherKind::Grain128aAuth ? std::optional<unsigned>{32}
                                                           : std::nullopt);
  cipher.load(v.key, v.iv);
  cipher.init();

  const std::uint64_t total_bits = v.offset_bits + 8 * nbytes;
  std::vector<std::uint8_t> raw((total_bits + 7) / 8);
  cipher.keystream(raw);

  std::vector<std::uint8_t> out(nbytes, 0);
  for (std::uint64_t i = 0; i < 8 * nbytes; ++i) {
    const std::uint64_t src = v.offset_bits + i;
    const unsigned bit = (raw[src / 8] >> (src % 8)) & 1;
    out[i / 8] |= static_cast<std::uint8_t>(bit << (i % 8));
  }
  return out;
}

}  // namespace

std::vector<KatVector> parse_kat_stream(std::istream& in) {
  std::vector<KatVector> vectors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tok;
    KatVector v;
    v.line = lineno;
    bool any = false;
    bool have_cipher = false, have_radix = false, have_key = false, have_iv = false,
         have_offset = false, have_ks = false;
    while (ss >> tok) {
      if (tok[0] == '#') break;
      any = true;
      const auto eq = tok.find('=');
      if (eq == std::string::npos) parse_fail(lineno, "expected key=value, got '" + tok + "'");
      const std::string k = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      try {
        if (k == "cipher") {
          v.cipher = cipher_from_name(val);
          have_cipher = true;
        } else if (k == "radix") {
          v.radix = radix_from_int(static_cast<unsigned>(std::stoul(val)));
          have_radix = true;
        } else if (k == "key") {
          v.key = from_hex(val);
          have_key = true;
        } else if (k == "iv") {
          v.iv = from_hex(val);
          have_iv = true;
        } else if (k == "offset") {
          v.offset_bits = std::stoull(val);
          have_offset = true;
        } else if (k == "keystream") {
          v.keystream = from_hex(val);
          have_ks = true;
        } else {
          parse_fail(lineno, "unknown field '" + k + "'");
        }
      } catch (const Error& e) {
        parse_fail(lineno, std::string(e.what()));
      } catch (const std::exception&) {
        parse_fail(lineno, "bad value for '" + k + "': " + val);
      }
    }
    if (!any) continue;
    if (!(have_cipher && have_radix && have_key && have_iv && have_offset && have_ks))
      parse_fail(lineno, "incomplete vector; need cipher, radix, key, iv, offset, keystream");
    if (v.keystream.empty()) parse_fail(lineno, "empty keystream field");
    vectors.push_back(std::move(v));
  }
  return vectors;
}

std::vector<KatVector> parse_kat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Io, "cannot open vector file: " + path);
  return parse_kat_stream(in);
}

KatReport kat_check(const std::vector<KatVector>& vectors) {
  KatReport report;
  for (const auto& v : vectors) {
    KatOutcome o;
    o.vector = v;
    const auto got = keystream_at_offset(v, v.keystream.size());
    o.got_hex = to_hex(got);
    o.pass = got == v.keystream;
    if (!o.pass) ++report.failures;
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

KatReport kat_check_file(const std::string& path) { return kat_check(parse_kat_file(path)); }

std::string render_kat_report(const KatReport& report) {
  std::ostringstream out;
  for (const auto& o : report.outcomes) {
    out << (o.pass ? "PASS" : "FAIL") << " line " << o.vector.line << ' '
        << cipher_name(o.vector.cipher) << " radix " << radix_bits(o.vector.radix) << " offset "
        << o.vector.offset_bits;
    if (!o.pass)
      out << "\n  expected " << to_hex(o.vector.keystream) << "\n  got      " << o.got_hex;
    out << '\n';
  }
  if (report.outcomes.empty())
    out << "warning: no vectors found (vacuous pass)\n";
  else
    out << report.outcomes.size() - report.failures << '/' << report.outcomes.size()
        << " vectors passed\n";
  return out.str();
}

}  // namespace sbe
