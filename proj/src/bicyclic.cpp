#include "icl/bicyclic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "icl/errors.hpp"

namespace icl::bicyclic {

Element mul(Element x, Element y) {
  std::int64_t t = std::max(x.b, y.a);
  return Element{x.a - x.b + t, y.b - y.a + t};
}

Element inv(Element x) {
  return Element{x.b, x.a};
}

Sub Sub::idempotents() {
  Sub s;
  s.idem_ = true;
  return s;
}

Sub Sub::tkd(std::int64_t k, std::int64_t d) {
  if (k < 0 || d < 1)
    throw InputError("subsemigroup parameters need k >= 0, d >= 1");
  Sub s;
  s.k_ = k;
  s.d_ = d;
  return s;
}

bool Sub::contains(Element x) const {
  if (idem_)
    return x.a == x.b;
  return x.a >= k_ && x.b >= k_ && (x.a - x.b) % d_ == 0;
}

bool Sub::subset_of(const Sub& o) const {
  if (idem_)
    return true;
  if (o.idem_)
    return false;
  return o.k_ <= k_ && d_ % o.d_ == 0;
}

Sub Sub::meet(const Sub& o) const {
  if (idem_ || o.idem_)
    return idempotents();
  return tkd(std::max(k_, o.k_), std::lcm(d_, o.d_));
}

Sub Sub::join(const Sub& o) const {
  if (idem_)
    return o;
  if (o.idem_)
    return *this;
  return tkd(std::min(k_, o.k_), std::gcd(d_, o.d_));
}

std::string Sub::to_string() const {
  if (idem_)
    return "E";
  std::ostringstream os;
  os << "k=" << k_ << ",d=" << d_;
  return os.str();
}

namespace {

bool is_primitive(const std::vector<std::int64_t>& pattern) {
  for (std::size_t p = 1; p < pattern.size(); ++p) {
    if (pattern.size() % p)
      continue;
    bool repeats = true;
    for (std::size_t i = p; i < pattern.size() && repeats; ++i)
      repeats = pattern[i] == pattern[i - p];
    if (repeats)
      return false;
  }
  return true;
}

void validate_sizes(const std::vector<std::int64_t>& sizes) {
  for (auto m : sizes)
    if (m < 1)
      throw InputError("class sizes must be positive");
}

}  // namespace

Trace Trace::infinite_class(std::vector<std::int64_t> prefix_sizes) {
  validate_sizes(prefix_sizes);
  Trace t;
  t.tail_ = TailKind::kInfiniteClass;
  t.prefix_ = std::move(prefix_sizes);
  return t;
}

Trace Trace::periodic(std::vector<std::int64_t> prefix_sizes, std::vector<std::int64_t> pattern) {
  validate_sizes(prefix_sizes);
  validate_sizes(pattern);
  if (pattern.empty())
    throw InputError("periodic pattern must be nonempty");

  // Reduce to the primitive root of the pattern.
  for (std::size_t p = 1; p < pattern.size(); ++p) {
    if (pattern.size() % p)
      continue;
    bool repeats = true;
    for (std::size_t i = p; i < pattern.size() && repeats; ++i)
      repeats = pattern[i] == pattern[i - p];
    if (repeats) {
      pattern.resize(p);
      break;
    }
  }
  internal_check(is_primitive(pattern), "pattern reduction failed");

  // Strip prefix entries already explained by the pattern: while the
  // last prefix size matches the last pattern entry, absorb it by
  // rotating the pattern right.  This makes the periodic part start as
  // early as possible.
  while (!prefix_sizes.empty() && prefix_sizes.back() == pattern.back()) {
    prefix_sizes.pop_back();
    std::rotate(pattern.rbegin(), pattern.rbegin() + 1, pattern.rend());
  }

  Trace t;
  t.tail_ = TailKind::kPeriodic;
  t.prefix_ = std::move(prefix_sizes);
  t.pattern_ = std::move(pattern);
  return t;
}

std::int64_t Trace::period() const {
  if (tail_ != TailKind::kPeriodic)
    throw InputError("period of a trace with an infinite class");
  std::int64_t d = 0;
  for (auto m : pattern_)
    d += m;
  return d;
}

std::int64_t Trace::infinite_class_start() const {
  if (tail_ != TailKind::kInfiniteClass)
    throw InputError("no infinite class");
  std::int64_t n = 0;
  for (auto m : prefix_)
    n += m;
  return n;
}

std::int64_t Trace::periodic_start() const {
  std::int64_t k = 0;
  for (auto m : prefix_)
    k += m;
  return k;
}

bool Trace::related(std::int64_t x, std::int64_t y) const {
  if (x < 0 || y < 0)
    throw InputError("points must be non-negative");
  if (x == y)
    return true;
  auto cx = class_max(x);
  auto cy = class_max(y);
  if (!cx || !cy)
    return !cx && !cy;
  // Same class iff same maximum.
  return *cx == *cy;
}

std::optional<std::int64_t> Trace::class_max(std::int64_t x) const {
  std::int64_t start = 0;
  for (auto m : prefix_) {
    if (x < start + m)
      return start + m - 1;
    start += m;
  }
  if (tail_ == TailKind::kInfiniteClass)
    return std::nullopt;
  std::int64_t d = period();
  std::int64_t offset = (x - start) % d;
  std::int64_t base = x - offset;
  for (auto m : pattern_) {
    if (offset < m)
      return base + m - 1;
    offset -= m;
    base += m;
  }
  throw InternalError("pattern walk out of range");
}

std::int64_t Trace::shift_threshold() const {
  if (tail_ != TailKind::kPeriodic)
    throw InputError("shift threshold of a trace with an infinite class");
  const std::int64_t d = period();
  const std::int64_t k = periodic_start();
  // The adjacent-pair pattern is d-shift invariant everywhere at or
  // beyond k; scan below k for the last point where it fails.
  std::int64_t l = 0;
  for (std::int64_t x = k - 1; x >= 0; --x) {
    if (related(x, x + 1) != related(x + d, x + 1 + d)) {
      l = x + 1;
      break;
    }
  }
  return l;
}

Sub Trace::normalizer() const {
  if (tail_ == TailKind::kInfiniteClass)
    return Sub::tkd(infinite_class_start(), 1);
  return Sub::tkd(shift_threshold(), period());
}

std::string Trace::to_string() const {
  std::ostringstream os;
  os << "prefix=[";
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (i)
      os << ',';
    os << prefix_[i];
  }
  os << "];tail=";
  if (tail_ == TailKind::kInfiniteClass) {
    os << "inf";
  } else {
    os << "per([";
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
      if (i)
        os << ',';
      os << pattern_[i];
    }
    os << "])";
  }
  return os.str();
}

bool is_valid_pair(const Trace& trace, const Sub& sub) {
  if (sub.is_idempotents())
    return true;
  if (trace.tail() == TailKind::kInfiniteClass)
    return sub.k() == trace.infinite_class_start();
  if (sub.d() % trace.period() != 0)
    return false;
  std::int64_t j = sub.k();
  if (j == trace.shift_threshold())
    return true;
  // j = c_u + 1 for a class maximum c_u >= k - 1, i.e. j at or beyond
  // the periodic zone and starting a class.
  return j >= trace.periodic_start() && j >= 1 && !trace.related(j - 1, j);
}

bool min_congruence_related(const Trace& trace, Element x, Element y, Side side) {
  if (x.b - x.a != y.b - y.a)
    return false;
  if (side == Side::kLeft)
    return trace.related(x.b, y.b);
  return trace.related(x.a, y.a);
}

bool normalizes_by_conjugation(const Trace& trace, Element g, std::int64_t bound) {
  Element gi = inv(g);
  for (std::int64_t x = 0; x <= bound; ++x) {
    for (std::int64_t y = x + 1; y <= bound; ++y) {
      if (!trace.related(x, y))
        continue;
      Element ex{x, x}, ey{y, y};
      Element down1 = gi * ex * g, down2 = gi * ey * g;
      if (!trace.related(down1.a, down2.a))
        return false;
      Element up1 = g * ex * gi, up2 = g * ey * gi;
      if (!trace.related(up1.a, up2.a))
        return false;
    }
  }
  return true;
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '[')
    throw InputError("expected '[' in list");
  ++pos;
  std::vector<std::int64_t> out;
  while (pos < text.size() && text[pos] != ']') {
    std::size_t next = pos;
    while (next < text.size() && text[next] != ',' && text[next] != ']')
      ++next;
    std::string tok = text.substr(pos, next - pos);
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InputError("bad integer '" + tok + "' in list");
    }
    pos = next;
    if (pos < text.size() && text[pos] == ',')
      ++pos;
  }
  if (pos >= text.size())
    throw InputError("unterminated list");
  ++pos;  // ']'
  return out;
}

}  // namespace

Trace parse_trace(const std::string& text) {
  const std::string prefix_key = "prefix=";
  const std::string tail_key = ";tail=";
  if (text.rfind(prefix_key, 0) != 0)
    throw InputError("trace syntax: prefix=[...];tail=inf|per([...])");
  std::size_t pos = prefix_key.size();
  std::vector<std::int64_t> prefix = parse_int_list(text, pos);
  if (text.compare(pos, tail_key.size(), tail_key) != 0)
    throw InputError("trace syntax: missing ';tail='");
  pos += tail_key.size();
  std::string tail = text.substr(pos);
  if (tail == "inf")
    return Trace::infinite_class(std::move(prefix));
  const std::string per_key = "per(";
  if (tail.rfind(per_key, 0) == 0 && tail.back() == ')') {
    std::size_t ppos = per_key.size();
    std::vector<std::int64_t> pattern = parse_int_list(tail, ppos);
    if (ppos != tail.size() - 1)
      throw InputError("trailing characters in periodic tail");
    return Trace::periodic(std::move(prefix), std::move(pattern));
  }
  throw InputError("trace tail must be 'inf' or 'per([...])'");
}

Sub parse_sub(const std::string& text) {
  if (text == "E")
    return Sub::idempotents();
  std::int64_t k = -1, d = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eq = text.find('=', pos);
    if (eq == std::string::npos)
      throw InputError("subsemigroup syntax: k=K,d=D or E");
    std::string key = text.substr(pos, eq - pos);
    std::size_t comma = text.find(',', eq);
    std::string val = text.substr(eq + 1, comma == std::string::npos ? std::string::npos
                                                                     : comma - eq - 1);
    std::int64_t num;
    try {
      num = std::stoll(val);
    } catch (const std::exception&) {
      throw InputError("bad integer '" + val + "'");
    }
    if (key == "k")
      k = num;
    else if (key == "d")
      d = num;
    else
      throw InputError("unknown key '" + key + "'");
    pos = comma == std::string::npos ? text.size() : comma + 1;
  }
  if (k < 0 || d < 0)
    throw InputError("subsemigroup needs both k and d");
  return Sub::tkd(k, d);
}

}  // namespace icl::bicyclic
