#include "semikern/session.hpp"

#include <fstream>
#include <sstream>

#include "semikern/decorate.hpp"
#include "semikern/finab.hpp"
#include "semikern/vect.hpp"

namespace semikern {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string concat_from(const std::vector<std::string>& words, std::size_t start) {
  std::string out;
  for (std::size_t i = start; i < words.size(); ++i) out += words[i];
  return out;
}

// "[1,2,3]" or "[]"
std::vector<long long> parse_int_list(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(line, "expected a bracketed list, got '" + s + "'");
  std::vector<long long> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (...) {
      throw ParseError(line, "bad integer '" + tok + "'");
    }
  }
  return out;
}

// "[[1,0],[0,1]]" or "[]"
std::vector<std::vector<long long>> parse_matrix(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(line, "expected a matrix, got '" + s + "'");
  std::vector<std::vector<long long>> out;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ',') {
      ++pos;
      continue;
    }
    if (body[pos] != '[') throw ParseError(line, "malformed matrix row in '" + s + "'");
    std::size_t end = body.find(']', pos);
    if (end == std::string::npos) throw ParseError(line, "unterminated matrix row");
    out.push_back(parse_int_list(body.substr(pos, end - pos + 1), line));
    pos = end + 1;
  }
  return out;
}

// "{[1,1];[0,1]}" or "{}"
std::vector<std::vector<long long>> parse_open(const std::string& s, int line) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError(line, "expected open generators in braces, got '" + s + "'");
  std::vector<std::vector<long long>> out;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ';') {
      ++pos;
      continue;
    }
    std::size_t end = body.find(']', pos);
    if (end == std::string::npos) throw ParseError(line, "unterminated generator vector");
    out.push_back(parse_int_list(body.substr(pos, end - pos + 1), line));
    pos = end + 1;
  }
  return out;
}

// the "key=value" fields after the fixed tokens, with whitespace removed
std::map<std::string, std::string> parse_fields(const std::string& rest, int line,
                                                const std::vector<std::string>& allowed) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    bool matched = false;
    for (const auto& key : allowed) {
      if (rest.compare(pos, key.size() + 1, key + "=") != 0) continue;
      std::size_t vstart = pos + key.size() + 1;
      // value runs to the next "key=" occurrence or end of string
      std::size_t vend = rest.size();
      for (const auto& k2 : allowed) {
        std::size_t found = rest.find(k2 + "=", vstart);
        if (found != std::string::npos && found < vend) vend = found;
      }
      if (out.count(key)) throw ParseError(line, "duplicate field '" + key + "'");
      out[key] = rest.substr(vstart, vend - vstart);
      pos = vend;
      matched = true;
      break;
    }
    if (!matched) throw ParseError(line, "unrecognized text '" + rest.substr(pos) + "'");
  }
  return out;
}

}  // namespace

Session::Session() = default;
Session::~Session() = default;
Session::Session(Session&&) noexcept = default;
Session& Session::operator=(Session&&) noexcept = default;

const Category& Session::category() const {
  if (!cat_) throw std::runtime_error("session has no category declaration");
  return *cat_;
}

bool Session::has_object(const std::string& name) const { return objects_.count(name) > 0; }
bool Session::has_morphism(const std::string& name) const { return morphisms_.count(name) > 0; }

const Obj& Session::object(const std::string& name) const {
  auto it = objects_.find(name);
  if (it == objects_.end()) throw std::runtime_error("unknown object '" + name + "'");
  return it->second;
}

const Mor& Session::morphism(const std::string& name) const {
  auto it = morphisms_.find(name);
  if (it == morphisms_.end()) throw std::runtime_error("unknown morphism '" + name + "'");
  return it->second;
}

void Session::set_category(const std::string& kind, long long p) {
  kind_ = kind;
  p_ = p;
  if (kind == "vect") {
    vect_ = std::make_unique<VectCategory>(p);
    cat_ = vect_.get();
  } else if (kind == "finab") {
    finab_ = std::make_unique<FinabCategory>();
    cat_ = finab_.get();
  } else if (kind == "lintop") {
    vect_ = std::make_unique<VectCategory>(p);
    dec_ = std::make_unique<DecoratedCategory>(*vect_, "lintop(p=" + std::to_string(p) + ")");
    cat_ = dec_.get();
  } else if (kind == "topab") {
    finab_ = std::make_unique<FinabCategory>();
    dec_ = std::make_unique<DecoratedCategory>(*finab_, "topab");
    cat_ = dec_.get();
  } else {
    throw std::runtime_error("unknown category kind '" + kind + "'");
  }
}

void Session::add_object(const std::string& name, const Obj& o) {
  if (objects_.count(name)) throw std::runtime_error("duplicate object '" + name + "'");
  objects_.emplace(name, o);
  object_names_.push_back(name);
}

void Session::add_morphism(const std::string& name, const Mor& m) {
  if (morphisms_.count(name)) throw std::runtime_error("duplicate morphism '" + name + "'");
  morphisms_.emplace(name, m);
  morphism_names_.push_back(name);
}

Session Session::parse_text(const std::string& text) {
  Session s;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::vector<std::string> w = split_words(line);
    if (w.empty()) continue;

    if (w[0] == "category") {
      if (s.cat_) throw ParseError(lineno, "category declared twice");
      if (w.size() < 2) throw ParseError(lineno, "category needs a kind");
      long long p = 2;
      if (w.size() >= 3) {
        if (w[2].rfind("p=", 0) != 0) throw ParseError(lineno, "expected p=<prime>");
        try {
          p = std::stoll(w[2].substr(2));
        } catch (...) {
          throw ParseError(lineno, "bad prime '" + w[2] + "'");
        }
      }
      try {
        s.set_category(w[1], p);
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }

    if (w[0] == "object") {
      if (!s.cat_) throw ParseError(lineno, "object before category declaration");
      if (w.size() < 3) throw ParseError(lineno, "object needs a name and dims");
      const std::string& name = w[1];
      if (s.objects_.count(name)) throw ParseError(lineno, "duplicate object '" + name + "'");
      auto fields = parse_fields(concat_from(w, 2), lineno, {"dims", "open"});
      if (!fields.count("dims")) throw ParseError(lineno, "object needs dims=[...]");
      std::vector<long long> dims = parse_int_list(fields["dims"], lineno);
      bool decorated = (s.kind_ == "lintop" || s.kind_ == "topab");
      if (fields.count("open") && !decorated)
        throw ParseError(lineno, "open decorations only apply to lintop/topab");
      try {
        Obj o;
        if (s.kind_ == "vect" || s.kind_ == "lintop") {
          if (dims.size() != 1 || dims[0] < 0)
            throw std::runtime_error("vect objects take dims=[n] with n >= 0");
          Obj base = s.vect_->object(static_cast<std::size_t>(dims[0]));
          if (s.kind_ == "vect") {
            o = base;
          } else if (!fields.count("open")) {
            o = s.dec_->object_discrete(base);
          } else {
            auto gens = parse_open(fields["open"], lineno);
            std::size_t n = static_cast<std::size_t>(dims[0]);
            FpMatrix rows(gens.size(), n, s.p_);
            for (std::size_t i = 0; i < gens.size(); ++i) {
              if (gens[i].size() != n) throw std::runtime_error("open generator length mismatch");
              for (std::size_t j = 0; j < n; ++j)
                rows.set(i, j, ((gens[i][j] % s.p_) + s.p_) % s.p_);
            }
            o = s.dec_->object(base, s.vect_->subobject(span_of_rows(rows)));
          }
        } else {  // finab / topab
          std::vector<Int> factors(dims.begin(), dims.end());
          Obj base = s.finab_->object(factors);
          if (s.kind_ == "finab") {
            o = base;
          } else if (!fields.count("open")) {
            o = s.dec_->object_discrete(base);
          } else {
            auto gens = parse_open(fields["open"], lineno);
            IntMatrix cols(factors.size(), gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) {
              if (gens[i].size() != factors.size())
                throw std::runtime_error("open generator length mismatch");
              for (std::size_t j = 0; j < factors.size(); ++j) cols.at(j, i) = gens[i][j];
            }
            o = s.dec_->object(base, s.finab_->subgroup(base, cols));
          }
        }
        s.add_object(name, o);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }

    if (w[0] == "morphism") {
      if (!s.cat_) throw ParseError(lineno, "morphism before category declaration");
      if (w.size() < 5 || w[3] != "->")
        throw ParseError(lineno, "expected: morphism <name> <src> -> <dst> matrix=[[...]]");
      const std::string& name = w[1];
      if (s.morphisms_.count(name)) throw ParseError(lineno, "duplicate morphism '" + name + "'");
      if (!s.objects_.count(w[2])) throw ParseError(lineno, "unknown object '" + w[2] + "'");
      if (!s.objects_.count(w[4])) throw ParseError(lineno, "unknown object '" + w[4] + "'");
      auto fields = parse_fields(concat_from(w, 5), lineno, {"matrix"});
      if (!fields.count("matrix")) throw ParseError(lineno, "morphism needs matrix=[[...]]");
      auto entries = parse_matrix(fields["matrix"], lineno);
      const Obj& src = s.objects_.at(w[2]);
      const Obj& dst = s.objects_.at(w[4]);
      try {
        bool decorated = (s.kind_ == "lintop" || s.kind_ == "topab");
        Obj bsrc = decorated ? DecoratedCategory::base_of(src) : src;
        Obj bdst = decorated ? DecoratedCategory::base_of(dst) : dst;
        Mor base;
        if (s.vect_) {
          std::size_t rows = VectCategory::dim_of(bdst), cols = VectCategory::dim_of(bsrc);
          if (entries.empty() && rows != 0 && cols != 0)
            throw std::runtime_error("matrix shape mismatch: expected " + std::to_string(rows) +
                                     "x" + std::to_string(cols));
          FpMatrix m(rows, cols, s.p_);
          if (!entries.empty()) {
            if (entries.size() != rows) throw std::runtime_error("matrix row count mismatch");
            for (std::size_t i = 0; i < rows; ++i) {
              if (entries[i].size() != cols) throw std::runtime_error("matrix column count mismatch");
              for (std::size_t j = 0; j < cols; ++j)
                m.set(i, j, ((entries[i][j] % s.p_) + s.p_) % s.p_);
            }
          }
          base = s.vect_->morphism(bsrc, bdst, m);
        } else {
          std::size_t rows = FinabCategory::factors_of(bdst).size();
          std::size_t cols = FinabCategory::factors_of(bsrc).size();
          if (entries.empty() && rows != 0 && cols != 0)
            throw std::runtime_error("matrix shape mismatch: expected " + std::to_string(rows) +
                                     "x" + std::to_string(cols));
          IntMatrix m(rows, cols);
          if (!entries.empty()) {
            if (entries.size() != rows) throw std::runtime_error("matrix row count mismatch");
            for (std::size_t i = 0; i < rows; ++i) {
              if (entries[i].size() != cols) throw std::runtime_error("matrix column count mismatch");
              for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entries[i][j];
            }
          }
          base = s.finab_->morphism(bsrc, bdst, m);
        }
        Mor full = decorated ? s.dec_->morphism(src, dst, base) : base;
        s.add_morphism(name, full);
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }

    throw ParseError(lineno, "unknown directive '" + w[0] + "'");
  }
  return s;
}

Session Session::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

std::string Session::to_text() const {
  std::ostringstream os;
  if (!cat_) return "";
  os << "category " << kind_;
  if (kind_ == "vect" || kind_ == "lintop") os << " p=" << p_;
  os << "\n";
  bool decorated = (kind_ == "lintop" || kind_ == "topab");
  for (const auto& name : object_names_) {
    const Obj& o = objects_.at(name);
    Obj base = decorated ? DecoratedCategory::base_of(o) : o;
    os << "object " << name << " dims=[";
    if (vect_) {
      os << VectCategory::dim_of(base);
    } else {
      const auto& f = FinabCategory::factors_of(base);
      for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    }
    os << "]";
    if (decorated) {
      const SubobjectPair& open = DecoratedCategory::open_of(o);
      os << " open={";
      if (vect_) {
        const FpMatrix& e = VectCategory::matrix_of(open.embed);  // ambient x k
        for (std::size_t cidx = 0; cidx < e.cols(); ++cidx) {
          os << (cidx ? ";" : "") << "[";
          for (std::size_t r = 0; r < e.rows(); ++r) os << (r ? "," : "") << e.at(r, cidx);
          os << "]";
        }
      } else {
        const IntMatrix& e = FinabCategory::matrix_of(open.embed);
        for (std::size_t cidx = 0; cidx < e.cols(); ++cidx) {
          os << (cidx ? ";" : "") << "[";
          for (std::size_t r = 0; r < e.rows(); ++r) os << (r ? "," : "") << e.at(r, cidx);
          os << "]";
        }
      }
      os << "}";
    }
    os << "\n";
  }
  for (const auto& name : morphism_names_) {
    const Mor& m = morphisms_.at(name);
    std::string src, dst;
    for (const auto& on : object_names_) {
      if (cat_->objects_equal(objects_.at(on), m.src) && src.empty()) src = on;
      if (cat_->objects_equal(objects_.at(on), m.dst) && dst.empty()) dst = on;
    }
    os << "morphism " << name << " " << src << " -> " << dst << " matrix=";
    Mor base = decorated ? Mor{DecoratedCategory::base_of(m.src),
                               DecoratedCategory::base_of(m.dst), m.payload}
                         : m;
    if (vect_) {
      const FpMatrix& e = VectCategory::matrix_of(base);
      if (e.rows() == 0 || e.cols() == 0) {
        os << "[]";
      } else {
        os << "[";
        for (std::size_t i = 0; i < e.rows(); ++i) {
          os << (i ? "," : "") << "[";
          for (std::size_t j = 0; j < e.cols(); ++j) os << (j ? "," : "") << e.at(i, j);
          os << "]";
        }
        os << "]";
      }
    } else {
      const IntMatrix& e = FinabCategory::matrix_of(base);
      if (e.rows() == 0 || e.cols() == 0) {
        os << "[]";
      } else {
        os << "[";
        for (std::size_t i = 0; i < e.rows(); ++i) {
          os << (i ? "," : "") << "[";
          for (std::size_t j = 0; j < e.cols(); ++j) os << (j ? "," : "") << e.at(i, j);
          os << "]";
        }
        os << "]";
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace semikern
