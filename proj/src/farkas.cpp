#include "f2tile/farkas.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace f2tile {

DualSystem build_dual(const Region& V) {
  const std::int64_t twoN = std::int64_t{1} << V.n();
  if (V.size() == 0 || twoN % V.size() != 0)
    throw std::invalid_argument("build_dual: |V| must divide 2^n");
  DualSystem d;
  d.V = V;
  d.complementSize = twoN / V.size();
  d.pointRows = sumset_support(V);  // contains 0; rows f(0) and f(x), x in V+V
  IntVec sp = spectrum(V);
  d.spectrumRows.push_back(0);
  for (Eigen::Index x = 1; x < sp.size(); ++x)
    if (sp[x] != 0) d.spectrumRows.push_back(static_cast<Word>(x));
  return d;
}

namespace {

Rational parse_value(const std::string& tok) {
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    boost::multiprecision::mpz_int p(tok.substr(0, slash)), q(tok.substr(slash + 1));
    if (q == 0) throw std::runtime_error("certificate: zero denominator");
    return Rational(p) / Rational(q);
  }
  // exact decimal: sign, integer part, optional fraction digits
  std::string s = tok;
  bool neg = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  std::string digits;
  int fracDigits = 0;
  bool dot = false, any = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (dot) throw std::runtime_error("certificate: bad value '" + tok + "'");
      dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      if (dot) ++fracDigits;
      any = true;
    } else {
      throw std::runtime_error("certificate: bad value '" + tok + "'");
    }
  }
  if (!any) throw std::runtime_error("certificate: bad value '" + tok + "'");
  // Strip leading zeros: the string constructor would read "025" as octal.
  std::size_t firstNonZero = digits.find_first_not_of('0');
  if (firstNonZero == std::string::npos) digits = "0";
  else digits.erase(0, firstNonZero);
  boost::multiprecision::mpz_int num(digits);
  Rational r(num);
  for (int k = 0; k < fracDigits; ++k) r /= 10;
  return neg ? -r : r;
}

void add_entry(std::map<Word, Rational>& section, Word idx, const Rational& val,
               std::int64_t limit) {
  if (limit >= 0 && static_cast<std::int64_t>(idx) >= limit)
    throw std::runtime_error("certificate: index " + std::to_string(idx) +
                             " out of range");
  auto [it, inserted] = section.emplace(idx, val);
  if (!inserted && it->second != val)
    throw std::runtime_error("certificate: conflicting values at index " +
                             std::to_string(idx));
}

void parse_line(const std::string& line, std::map<Word, Rational>& section,
                std::int64_t limit) {
  std::string t = line;
  std::istringstream ss(t);
  std::string head, valTok;
  ss >> head;
  if (head.front() == '(') {
    // (c,l) or (c,l,s)
    auto close = t.find(')');
    if (close == std::string::npos)
      throw std::runtime_error("certificate: unbalanced segment '" + line + "'");
    std::string inner = t.substr(t.find('(') + 1, close - t.find('(') - 1);
    std::vector<long long> nums;
    std::stringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) nums.push_back(std::stoll(tok));
    std::istringstream rest(t.substr(close + 1));
    rest >> valTok;
    if (!rest || valTok.empty())
      throw std::runtime_error("certificate: missing value in '" + line + "'");
    Rational val = parse_value(valTok);
    if (nums.size() == 2) {
      for (long long i = nums[0]; i < nums[0] + nums[1]; ++i)
        add_entry(section, static_cast<Word>(i), val, limit);
    } else if (nums.size() == 3) {
      for (long long i = nums[0]; i < nums[0] + nums[1]; i += nums[2])
        add_entry(section, static_cast<Word>(i), val, limit);
    } else {
      throw std::runtime_error("certificate: bad segment '" + line + "'");
    }
  } else {
    ss >> valTok;
    if (!ss || valTok.empty())
      throw std::runtime_error("certificate: missing value in '" + line + "'");
    add_entry(section, static_cast<Word>(std::stoll(head)), parse_value(valTok),
              limit);
  }
}

bool is_separator(const std::string& t) {
  return t.size() >= 3 && t.find_first_not_of('-') == std::string::npos;
}

}  // namespace

Certificate parse_certificate(std::istream& in) {
  Certificate cert;
  std::string line;
  int section = 0;
  std::int64_t limit = -1;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    std::string t = line.substr(b, e - b + 1);
    if (t[0] == '#') continue;
    if (t.rfind("n=", 0) == 0) {
      cert.n = std::stoi(t.substr(2));
      check_dim(cert.n);
      limit = std::int64_t{1} << cert.n;
      continue;
    }
    if (is_separator(t)) {
      if (++section > 1) throw std::runtime_error("certificate: extra separator");
      continue;
    }
    parse_line(t, section == 0 ? cert.upper : cert.lower, limit);
  }
  if (section == 0) throw std::runtime_error("certificate: missing separator");
  if (cert.upper.empty() && cert.lower.empty())
    throw std::runtime_error("certificate: no entries");
  return cert;
}

Certificate parse_certificate_string(const std::string& text) {
  std::istringstream in(text);
  return parse_certificate(in);
}

Certificate parse_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file: " + path);
  return parse_certificate(in);
}

std::string format_certificate(const Certificate& cert) {
  std::ostringstream os;
  if (cert.n >= 0) os << "n=" << cert.n << "\n";
  auto emit = [&os](const std::map<Word, Rational>& sec) {
    for (const auto& [idx, val] : sec) os << idx << " " << val << "\n";
  };
  emit(cert.upper);
  os << "---\n";
  emit(cert.lower);
  return os.str();
}

namespace {

struct Attempt {
  bool bitrev;
  bool upperIsSpectrum;
  bool ignoreOffRow;
};

std::string describe(const Attempt& a) {
  std::string s = a.bitrev ? "bit-reversed" : "bit-identity";
  s += a.upperIsSpectrum ? ", upper=spectrum-side" : ", upper=point-side";
  if (a.ignoreOffRow) s += ", off-row entries ignored";
  return s;
}

VerifyAttempt try_verify(const Region& V, const Certificate& cert,
                         const Attempt& a) {
  VerifyAttempt out;
  out.convention = describe(a);
  const int n = V.n();
  const std::int64_t twoN = std::int64_t{1} << n;
  const std::int64_t asz = twoN / V.size();

  const Region sumset(n, sumset_support(V));
  const IntVec sp = spectrum(V);

  auto mapped = [&](Word idx) { return a.bitrev ? reverse_bits(idx, n) : idx; };
  const auto& specSection = a.upperIsSpectrum ? cert.upper : cert.lower;
  const auto& pointSection = a.upperIsSpectrum ? cert.lower : cert.upper;

  // Reconstruct the eliminated row-(1) multipliers: z_xh equals the fh-row
  // multiplier where that row exists, 0 where the column inequality is taken
  // as an equality.
  Vec<Rational> zhat = Vec<Rational>::Constant(twoN, Rational(0));
  std::map<Word, Rational> zf;
  for (const auto& [idx, val] : specSection) {
    Word x = mapped(idx);
    if (static_cast<std::int64_t>(x) >= twoN) {
      out.outcome = "MALFORMED";
      out.detail = "spectrum-side index out of range: " + std::to_string(idx);
      return out;
    }
    if (x != 0 && sp[x] == 0) {
      if (val == 0 || a.ignoreOffRow) continue;
      out.outcome = "MALFORMED";
      out.detail = "entry on nonexistent spectrum row " + std::to_string(idx);
      return out;
    }
    zhat[x] = val;
  }
  for (const auto& [idx, val] : pointSection) {
    Word x = mapped(idx);
    if (static_cast<std::int64_t>(x) >= twoN) {
      out.outcome = "MALFORMED";
      out.detail = "point-side index out of range: " + std::to_string(idx);
      return out;
    }
    if (x != 0 && !sumset.contains(x)) {
      if (val == 0 || a.ignoreOffRow) continue;
      out.outcome = "MALFORMED";
      out.detail = "entry on nonexistent point row " + std::to_string(idx);
      return out;
    }
    zf[x] = val;
  }

  // Column constraints over f(x): one exact transform of the z_xh vector.
  Vec<Rational> g = zhat;
  wht_in_place(g);
  std::int64_t violations = 0;
  std::string first;
  for (std::int64_t x = 0; x < twoN; ++x) {
    Rational lhs = g[x];
    auto it = zf.find(static_cast<Word>(x));
    if (it != zf.end()) lhs += it->second;
    if (lhs < 0) {
      ++violations;
      if (first.empty()) {
        std::ostringstream os;
        os << "column f(" << x << "): " << lhs << " < 0";
        first = os.str();
      }
    }
  }

  Rational btz = Rational(asz) * (zf.count(0) ? zf.at(0) : Rational(0)) +
                 Rational(asz) * asz * zhat[0];
  out.btz = btz;
  if (violations == 0 && btz < 0) {
    out.outcome = "VALID";
  } else {
    out.outcome = "INVALID";
    std::ostringstream os;
    if (!first.empty()) os << first << " (" << violations << " violated columns)";
    if (btz >= 0) {
      if (!first.empty()) os << "; ";
      os << "b^T z = " << btz << " not negative";
    }
    out.detail = os.str();
  }
  return out;
}

}  // namespace

Verdict verify_certificate(const Region& V, const Certificate& cert,
                           const VerifyOptions& opts) {
  if (cert.n >= 0 && cert.n != V.n())
    throw std::invalid_argument("verify_certificate: dimension mismatch");
  if ((std::int64_t{1} << V.n()) % V.size() != 0)
    throw std::invalid_argument("verify_certificate: |V| must divide 2^n");

  std::vector<bool> bitChoices, sectionChoices, offRowChoices;
  if (opts.bits == BitConvention::Auto) bitChoices = {false, true};
  else bitChoices = {opts.bits == BitConvention::Reversed};
  if (opts.sections == SectionMeaning::Auto) sectionChoices = {true, false};
  else sectionChoices = {opts.sections == SectionMeaning::UpperIsSpectrumSide};
  if (opts.offRow == OffRowPolicy::Auto) offRowChoices = {false, true};
  else offRowChoices = {opts.offRow == OffRowPolicy::Ignore};

  Verdict v;
  bool anyInvalid = false;
  for (bool ignore : offRowChoices) {
    for (bool upperSpec : sectionChoices) {
      for (bool rev : bitChoices) {
        VerifyAttempt att = try_verify(V, cert, {rev, upperSpec, ignore});
        v.attempts.push_back(att);
        if (att.outcome == "VALID") {
          v.status = Verdict::Valid;
          v.btz = att.btz;
          v.convention = att.convention;
          return v;
        }
        if (att.outcome == "INVALID") anyInvalid = true;
      }
    }
  }
  v.status = anyInvalid ? Verdict::Invalid : Verdict::Malformed;
  if (!v.attempts.empty()) v.btz = v.attempts.front().btz;
  return v;
}

Verdict certificate_scale_check(const Region& V, const Certificate& cert,
                                const Rational& lambda,
                                const VerifyOptions& opts) {
  if (lambda <= 0)
    throw std::invalid_argument("certificate_scale_check: lambda must be positive");
  Certificate scaled = cert;
  for (auto& [idx, val] : scaled.upper) val *= lambda;
  for (auto& [idx, val] : scaled.lower) val *= lambda;
  return verify_certificate(V, scaled, opts);
}

}  // namespace f2tile
