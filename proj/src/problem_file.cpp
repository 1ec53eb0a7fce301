#include "twistalg/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace twistalg {

namespace {

struct Value {
  enum class Kind { Int, Str, Arr } kind = Kind::Int;
  std::int64_t i = 0;
  std::uint64_t u = 0;  // unsigned reading; differs from i only when `big`
  bool big = false;
  std::string s;
  std::vector<Value> a;
  int line = 0;
};

class Reader {
 public:
  explicit Reader(const std::string& text) : t_(text) {}

  int line() const { return line_; }
  bool done() {
    skip_blank(true);
    return pos_ >= t_.size();
  }

  // Whitespace and comments; newlines only when allowed.
  void skip_blank(bool newlines) {
    while (pos_ < t_.size()) {
      const char c = t_[pos_];
      if (c == '#') {
        while (pos_ < t_.size() && t_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        if (!newlines) return;
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else {
        return;
      }
    }
  }

  char peek() const { return pos_ < t_.size() ? t_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(line_, std::string("expected ") + what);
  }

  std::string ident() {
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') out += t_[pos_++];
    if (out.empty()) throw ParseError(line_, "expected a key");
    return out;
  }

  Value value() {
    skip_blank(true);
    Value v;
    v.line = line_;
    const char c = peek();
    if (c == '[') {
      ++pos_;
      v.kind = Value::Kind::Arr;
      skip_blank(true);
      if (eat(']')) return v;
      for (;;) {
        v.a.push_back(value());
        skip_blank(true);
        if (eat(']')) return v;
        expect(',', "',' or ']' in array");
        skip_blank(true);
        if (eat(']')) return v;  // trailing comma
      }
    }
    if (c == '"') {
      ++pos_;
      v.kind = Value::Kind::Str;
      while (peek() != '"') {
        if (peek() == '\n' || peek() == '\0') throw ParseError(v.line, "unterminated string");
        v.s += t_[pos_++];
      }
      ++pos_;
      return v;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      if (c == '-' || c == '+') digits += t_[pos_++];
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')
        if (t_[pos_++] != '_') digits += t_[pos_ - 1];
      if (digits.empty() || digits == "-" || digits == "+") throw ParseError(line_, "malformed integer");
      try {
        v.i = std::stoll(digits);
        v.u = static_cast<std::uint64_t>(v.i);
      } catch (const std::exception&) {
        try {
          if (digits[0] == '-') throw std::out_of_range(digits);
          v.u = std::stoull(digits);
          v.big = true;
        } catch (const std::exception&) {
          throw ParseError(line_, "integer out of range: " + digits);
        }
      }
      return v;
    }
    throw ParseError(line_, std::string("unexpected character '") + c + "'");
  }

  void end_of_line() {
    skip_blank(false);
    if (pos_ < t_.size() && t_[pos_] != '\n') throw ParseError(line_, "trailing characters after value");
  }

 private:
  const std::string& t_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

using Table = std::map<std::string, Value>;

struct Section {
  std::string name;
  bool array = false;
  int line = 0;
  Table keys;
};

std::int64_t as_int(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Int) throw ParseError(v.line, what + " must be an integer");
  if (v.big) throw ParseError(v.line, what + " is out of range");
  return v.i;
}

IntVec as_int_vec(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Arr) throw ParseError(v.line, what + " must be an array of integers");
  IntVec out;
  for (const auto& x : v.a) out.push_back(as_int(x, what + " entries"));
  return out;
}

IntMat as_matrix(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Arr || v.a.empty()) throw ParseError(v.line, what + " must be a non-empty matrix");
  IntMat m;
  for (const auto& row : v.a) {
    m.push_back(as_int_vec(row, what + " rows"));
    if (m.back().size() != v.a.size()) throw ParseError(row.line, what + " must be square");
  }
  return m;
}

const Value& require(const Section& s, const std::string& key) {
  const auto it = s.keys.find(key);
  if (it == s.keys.end())
    throw ParseError(s.line, "missing key '" + key + "'" + (s.name.empty() ? "" : " in [" + s.name + "]"));
  return it->second;
}

void reject_unknown(const Section& s, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : s.keys) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ParseError(v.line, "unknown key '" + k + "'" + (s.name.empty() ? "" : " in [" + s.name + "]"));
  }
}

}  // namespace

ProblemSpec parse_problem_text(const std::string& text) {
  Reader r(text);
  std::vector<Section> sections(1);
  sections[0].line = 1;
  while (!r.done()) {
    const int line = r.line();
    if (r.eat('[')) {
      Section s;
      s.line = line;
      s.array = r.eat('[');
      s.name = r.ident();
      r.expect(']', "']'");
      if (s.array) r.expect(']', "']]'");
      r.end_of_line();
      if (!s.array)
        for (const auto& prev : sections)
          if (prev.name == s.name) throw ParseError(line, "section [" + s.name + "] given twice");
      sections.push_back(std::move(s));
      continue;
    }
    const std::string key = r.ident();
    r.skip_blank(false);
    r.expect('=', "'=' after key");
    Value v = r.value();
    r.end_of_line();
    Section& cur = sections.back();
    if (cur.keys.count(key)) throw ParseError(line, "key '" + key + "' given twice");
    v.line = line;
    cur.keys.emplace(key, std::move(v));
  }

  ProblemSpec spec;
  const Section& top = sections[0];
  reject_unknown(top, {"name", "p", "seed", "l_orders"});
  if (auto it = top.keys.find("name"); it != top.keys.end()) {
    if (it->second.kind != Value::Kind::Str) throw ParseError(it->second.line, "name must be a string");
    spec.name = it->second.s;
  }
  spec.p = as_int(require(top, "p"), "p");
  if (auto it = top.keys.find("seed"); it != top.keys.end()) {
    const Value& v = it->second;
    if (v.kind != Value::Kind::Int || (!v.big && v.i < 0))
      throw ParseError(v.line, "seed must be a non-negative integer");
    spec.seed = v.u;
  }
  spec.l_orders = as_int_vec(require(top, "l_orders"), "l_orders");
  if (spec.l_orders.empty()) throw ParseError(require(top, "l_orders").line, "l_orders must not be empty");

  const Section* action = nullptr;
  for (std::size_t k = 1; k < sections.size(); ++k) {
    const Section& s = sections[k];
    if (s.name == "component" && s.array) {
      reject_unknown(s, {"n", "r"});
      HomocyclicComponent c;
      c.n = static_cast<int>(as_int(require(s, "n"), "n"));
      c.rank = static_cast<int>(as_int(require(s, "r"), "r"));
      spec.components.push_back(c);
    } else if (s.name == "form" && s.array) {
      reject_unknown(s, {"i", "j", "order", "exponent"});
      const std::int64_t i = as_int(require(s, "i"), "i");
      const std::int64_t j = as_int(require(s, "j"), "j");
      if (i < 1 || j < 1) throw ParseError(s.line, "form generator indices are 1-based");
      FormEntry e;
      e.i = static_cast<std::size_t>(i - 1);
      e.j = static_cast<std::size_t>(j - 1);
      e.order = as_int(require(s, "order"), "order");
      e.exponent = as_int(require(s, "exponent"), "exponent");
      spec.form.push_back(e);
    } else if (s.name == "action" && !s.array) {
      action = &s;
    } else {
      throw ParseError(s.line, "unknown section " + std::string(s.array ? "[[" : "[") + s.name + (s.array ? "]]" : "]"));
    }
  }
  if (spec.components.empty()) throw ParseError(1, "at least one [[component]] is required");
  if (!action) throw ParseError(1, "missing [action] section");
  for (const auto& [k, v] : action->keys) {
    bool ok = k.size() > 1 && k[0] == 'g';
    for (std::size_t c = 1; ok && c < k.size(); ++c) ok = std::isdigit(static_cast<unsigned char>(k[c]));
    if (!ok || std::stoul(k.substr(1)) < 1 || std::stoul(k.substr(1)) > spec.l_orders.size())
      throw ParseError(v.line, "action keys are g1 .. g" + std::to_string(spec.l_orders.size()));
  }
  for (std::size_t g = 0; g < spec.l_orders.size(); ++g) {
    const std::string key = "g" + std::to_string(g + 1);
    const auto it = action->keys.find(key);
    if (it == action->keys.end()) throw ParseError(action->line, "missing action of " + key);
    const Value& v = it->second;
    if (v.kind != Value::Kind::Arr || v.a.size() != spec.components.size())
      throw ParseError(v.line, key + " needs one matrix per component");
    std::vector<IntMat> per;
    for (std::size_t c = 0; c < v.a.size(); ++c) {
      per.push_back(as_matrix(v.a[c], key));
      if (per.back().size() != static_cast<std::size_t>(spec.components[c].rank))
        throw ParseError(v.a[c].line, key + " matrix " + std::to_string(c + 1) + " must be " +
                                          std::to_string(spec.components[c].rank) + " x " +
                                          std::to_string(spec.components[c].rank));
    }
    spec.action.push_back(std::move(per));
  }
  return spec;
}

ProblemSpec validate_problem(ProblemSpec spec) {
  try {
    (void)make_instance(spec);
  } catch (const Error& e) {
    if (e.code() == Errc::ValidationError) throw;
    throw Error(Errc::ValidationError, e.what());
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return validate_problem(parse_problem_text(ss.str()));
}

namespace {

std::string vec_text(const IntVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string write_problem_text(const ProblemSpec& spec) {
  std::ostringstream o;
  if (!spec.name.empty()) o << "name = \"" << spec.name << "\"\n";
  o << "p = " << spec.p << "\n";
  o << "seed = " << spec.seed << "\n";
  o << "l_orders = " << vec_text(spec.l_orders) << "\n";
  for (const auto& c : spec.components) o << "\n[[component]]\nn = " << c.n << "\nr = " << c.rank << "\n";
  o << "\n[action]\n";
  for (std::size_t g = 0; g < spec.action.size(); ++g) {
    o << "g" << g + 1 << " = [";
    for (std::size_t c = 0; c < spec.action[g].size(); ++c) {
      o << (c ? ", " : "") << "[";
      const IntMat& m = spec.action[g][c];
      for (std::size_t i = 0; i < m.size(); ++i) o << (i ? ", " : "") << vec_text(m[i]);
      o << "]";
    }
    o << "]\n";
  }
  for (const auto& e : spec.form)
    o << "\n[[form]]\ni = " << e.i + 1 << "\nj = " << e.j + 1 << "\norder = " << e.order << "\nexponent = " << e.exponent
      << "\n";
  return o.str();
}

}  // namespace twistalg
