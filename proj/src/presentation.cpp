#include "b0/presentation.hpp"

#include <json.hpp>
#include <sstream>

namespace b0 {

const Word* PcPresentation::comm(int i, int j) const {
  auto it = comm_rhs.find({i, j});
  return it == comm_rhs.end() ? nullptr : &it->second;
}

Int PcPresentation::order() const {
  Int o = 1;
  for (int e : orders) o *= e;
  return o;
}

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

// Cursor over a single source line; columns are 1-based for diagnostics.
struct LineCursor {
  std::string_view s;
  size_t pos = 0;
  int line_no;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_no, static_cast<int>(pos) + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("expected a number");
    if (pos - start > 9) fail("number too large");
    long v = 0;
    for (size_t k = start; k < pos; ++k) v = v * 10 + (s[k] - '0');
    return v;
  }
  std::string keyword() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
      ++pos;
    return std::string(s.substr(start, pos - start));
  }
  std::string rest() {
    skip_ws();
    size_t end = s.size();
    while (end > pos && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
    return std::string(s.substr(pos, end - pos));
  }
};

int generator_index(LineCursor& c, int n) {
  c.expect('g');
  long i = c.integer();
  if (i < 1 || i > n) c.fail("generator index out of range");
  return static_cast<int>(i);
}

// <word> := `1` | factor (`*` factor)*, factor := g<k> | g<k>^<x>.
// Enforces normality and that every generator exceeds `above`.
Word parse_word(LineCursor& c, const std::vector<int>& orders, int above) {
  const int n = static_cast<int>(orders.size());
  Word w;
  if (c.consume('1')) {
    if (!c.at_end()) c.fail("trailing input after identity word");
    return w;
  }
  int prev = 0;
  do {
    int k = generator_index(c, n);
    long x = 1;
    if (c.consume('^')) x = c.integer();
    if (k <= above) c.fail("word generator does not exceed the relation index");
    if (k <= prev) c.fail("word generators must strictly increase");
    if (x < 1 || x >= orders[k - 1]) c.fail("exponent outside [1, order-1]");
    w.push_back({k, static_cast<int>(x)});
    prev = k;
  } while (c.consume('*'));
  if (!c.at_end()) c.fail("trailing input after word");
  return w;
}

}  // namespace

PcPresentation parse_presentation(std::string_view text) {
  PcPresentation p;
  bool have_header = false, have_orders = false;
  std::vector<bool> power_seen;

  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                        : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    LineCursor c{raw, 0, line_no};
    if (c.at_end()) continue;

    if (!have_header) {
      if (c.keyword() != "pcgroup") c.fail("expected 'pcgroup <n>'");
      long n = c.integer();
      if (n < 1 || n > 64) c.fail("generator count out of range");
      if (!c.at_end()) c.fail("trailing input after 'pcgroup'");
      p.n = static_cast<int>(n);
      have_header = true;
      continue;
    }

    if (c.peek('[')) {
      if (!have_orders) c.fail("relation before 'orders' line");
      c.expect('[');
      int i = generator_index(c, p.n);
      c.expect(',');
      int j = generator_index(c, p.n);
      c.expect(']');
      if (j >= i) c.fail("commutator [g_i,g_j] requires j < i");
      if (p.comm_rhs.count({i, j})) c.fail("duplicate commutator relation");
      c.expect('=');
      Word w = parse_word(c, p.orders, i);
      if (!w.empty()) p.comm_rhs.emplace(std::make_pair(i, j), std::move(w));
      continue;
    }

    if (c.peek('g')) {
      if (!have_orders) c.fail("relation before 'orders' line");
      int i = generator_index(c, p.n);
      c.expect('^');
      long e = c.integer();
      if (e != p.orders[i - 1]) c.fail("power exponent must equal the declared order");
      if (power_seen[i - 1]) c.fail("duplicate power relation");
      power_seen[i - 1] = true;
      c.expect('=');
      p.power_rhs[i - 1] = parse_word(c, p.orders, i);
      continue;
    }

    std::string kw = c.keyword();
    if (kw == "name") {
      p.name = c.rest();
      if (p.name.empty()) c.fail("empty name");
      continue;
    }
    if (kw == "orders") {
      if (have_orders) c.fail("duplicate 'orders' line");
      for (int i = 0; i < p.n; ++i) {
        long e = c.integer();
        if (e < 2) c.fail("generator order must be at least 2");
        p.orders.push_back(static_cast<int>(e));
      }
      if (!c.at_end()) c.fail("trailing input after 'orders'");
      p.power_rhs.assign(p.n, {});
      power_seen.assign(p.n, false);
      have_orders = true;
      continue;
    }
    c.fail("unrecognized declaration");
  }

  if (!have_header) throw ParseError(1, 1, "missing 'pcgroup' header");
  if (!have_orders) throw ParseError(line_no, 1, "missing 'orders' line");
  return p;
}

void check_well_formed(const PcPresentation& p) {
  auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
  if (p.n < 1) fail("presentation has no generators");
  if (static_cast<int>(p.orders.size()) != p.n) fail("orders size mismatch");
  if (static_cast<int>(p.power_rhs.size()) != p.n)
    fail("power relation count mismatch");
  for (int e : p.orders)
    if (e < 2) fail("generator order below 2");
  auto check_word = [&](const Word& w, int above) {
    int prev = above;
    for (const Factor& f : w) {
      if (f.gen <= prev || f.gen > p.n) fail("word not normal");
      if (f.exp < 1 || f.exp >= p.orders[f.gen - 1])
        fail("word exponent out of range");
      prev = f.gen;
    }
  };
  for (int i = 1; i <= p.n; ++i) check_word(p.power_rhs[i - 1], i);
  for (const auto& [key, w] : p.comm_rhs) {
    auto [i, j] = key;
    if (j < 1 || i <= j || i > p.n) fail("commutator key out of range");
    if (w.empty()) fail("stored commutator with trivial rhs");
    check_word(w, i);
  }
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += '*';
    out += 'g' + std::to_string(w[k].gen);
    if (w[k].exp != 1) out += '^' + std::to_string(w[k].exp);
  }
  return out;
}

namespace {

std::string serialize_text(const PcPresentation& p) {
  std::ostringstream os;
  os << "pcgroup " << p.n << '\n';
  if (!p.name.empty()) os << "name " << p.name << '\n';
  os << "orders";
  for (int e : p.orders) os << ' ' << e;
  os << '\n';
  for (int i = 1; i <= p.n; ++i) {
    os << 'g' << i << '^' << p.orders[i - 1] << " = "
       << word_to_string(p.power_rhs[i - 1]) << '\n';
    for (int j = 1; j < i; ++j) {
      if (const Word* w = p.comm(i, j))
        os << "[g" << i << ",g" << j << "] = " << word_to_string(*w) << '\n';
    }
  }
  return os.str();
}

nlohmann::json word_to_json(const Word& w) {
  nlohmann::json a = nlohmann::json::array();
  for (const Factor& f : w) a.push_back({f.gen, f.exp});
  return a;
}

std::string serialize_json(const PcPresentation& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["n"] = p.n;
  j["orders"] = p.orders;
  nlohmann::json powers = nlohmann::json::array();
  for (const Word& w : p.power_rhs) powers.push_back(word_to_json(w));
  j["powers"] = std::move(powers);
  nlohmann::json comms = nlohmann::json::object();
  for (const auto& [key, w] : p.comm_rhs)
    comms[std::to_string(key.first) + "," + std::to_string(key.second)] =
        word_to_json(w);
  j["comms"] = std::move(comms);
  return j.dump(2);
}

}  // namespace

std::string serialize(const PcPresentation& p, Format format) {
  return format == Format::Text ? serialize_text(p) : serialize_json(p);
}

}  // namespace b0
