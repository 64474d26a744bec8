#include "stonework/polycyclic.hpp"

#include <algorithm>
#include <set>

#include "stonework/errors.hpp"

namespace stonework::poly {

  bool is_prefix(Word const& p, Word const& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  }

  bool prefix_comparable(Word const& a, Word const& b) { return is_prefix(a, b) || is_prefix(b, a); }

  Word concat(Word const& a, Word const& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  Word drop(Word const& w, std::size_t k) {
    return k >= w.size() ? Word{} : Word(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  }

  namespace {

    void check_arity(std::size_t arity) {
      if (arity < min_arity || arity > max_arity) {
        throw InvalidInput("arity " + std::to_string(arity) + " outside 2.."
                           + std::to_string(max_arity));
      }
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    }

    Word primitive_root(Word const& v) {
      auto const n = v.size();
      for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) {
          continue;
        }
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) {
          periodic = v[i] == v[i - d];
        }
        if (periodic) {
          return Word(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d));
        }
      }
      return v;
    }

  }  // namespace

  std::string format_word(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (auto c : w) {
      out += "a" + std::to_string(c + 1);
    }
    return out;
  }

  Word parse_word(std::string_view text, std::size_t arity) {
    text = trim(text);
    Word out;
    if (text.empty() || text == "e") {
      return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] != 'a' || i + 1 >= text.size() || text[i + 1] < '1' || text[i + 1] > '9') {
        throw InvalidInput("bad word '" + std::string(text) + "'");
      }
      std::size_t letter = static_cast<std::size_t>(text[i + 1] - '0');
      if (letter > arity) {
        throw InvalidInput("letter a" + std::to_string(letter) + " outside a1..a"
                           + std::to_string(arity));
      }
      out.push_back(static_cast<Letter>(letter - 1));
      i += 2;
    }
    return out;
  }

  PolyElement poly_mul(PolyElement const& a, PolyElement const& b) {
    if (a.zero || b.zero) {
      return PolyElement::make_zero();
    }
    if (is_prefix(a.y, b.x)) {
      return PolyElement::pair(concat(a.x, drop(b.x, a.y.size())), b.y);
    }
    if (is_prefix(b.x, a.y)) {
      return PolyElement::pair(a.x, concat(b.y, drop(a.y, b.x.size())));
    }
    return PolyElement::make_zero();
  }

  bool poly_leq(PolyElement const& a, PolyElement const& b) {
    return a == poly_mul(b, poly_mul(a.inverse(), a));
  }

  std::string format_poly(PolyElement const& a) {
    if (a.zero) {
      return "0";
    }
    if (a.x.empty() && a.y.empty()) {
      return "1";
    }
    if (a.y.empty()) {
      return format_word(a.x);
    }
    if (a.x.empty()) {
      return format_word(a.y) + "*";
    }
    return format_word(a.x) + "." + format_word(a.y) + "*";
  }

  PolyElement parse_poly(std::string_view text, std::size_t arity) {
    check_arity(arity);
    text = trim(text);
    if (text == "0") {
      return PolyElement::make_zero();
    }
    if (text == "1") {
      return PolyElement::one();
    }
    if (text.empty() || text.back() != '*') {
      return PolyElement::pair(parse_word(text, arity), {});
    }
    text.remove_suffix(1);
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      return PolyElement::pair({}, parse_word(text, arity));
    }
    return PolyElement::pair(parse_word(text.substr(0, dot), arity),
                             parse_word(text.substr(dot + 1), arity));
  }

  // ---------------------------------------------------------------- C_n

  bool cone_contains(CnElement::Cone const& outer, CnElement::Cone const& inner) {
    auto const& [xo, yo] = outer;
    auto const& [xi, yi] = inner;
    return is_prefix(xo, xi) && is_prefix(yo, yi) && xi.size() - xo.size() == yi.size() - yo.size()
           && drop(xi, xo.size()) == drop(yi, yo.size());
  }

  namespace {

    // Cones are nested or disjoint, so the union is the union of the
    // maximal ones.
    std::vector<CnElement::Cone> maximal_cones(std::vector<CnElement::Cone> cones) {
      std::sort(cones.begin(), cones.end());
      cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
      std::vector<CnElement::Cone> out;
      for (std::size_t i = 0; i < cones.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < cones.size() && !covered; ++j) {
          covered = j != i && cone_contains(cones[j], cones[i]);
        }
        if (!covered) {
          out.push_back(cones[i]);
        }
      }
      return out;
    }

    bool pairwise_incomparable(std::vector<CnElement::Cone> const& cones) {
      for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
          if (prefix_comparable(cones[i].first, cones[j].first)
              || prefix_comparable(cones[i].second, cones[j].second)) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  bool cones_form_bisection(std::vector<CnElement::Cone> const& cones) {
    return pairwise_incomparable(maximal_cones(cones));
  }

  CnElement::CnElement(std::size_t arity) : arity_(arity) { check_arity(arity); }

  CnElement::CnElement(std::size_t arity, std::vector<Cone> cones, Trusted)
      : arity_(arity), cones_(std::move(cones)) {}

  CnElement::CnElement(std::size_t arity, std::vector<Cone> cones) : arity_(arity) {
    check_arity(arity);
    for (auto const& [x, y] : cones) {
      for (auto c : concat(x, y)) {
        if (c >= arity) {
          throw InvalidInput("letter outside the alphabet");
        }
      }
    }
    auto maximal = maximal_cones(std::move(cones));
    if (!pairwise_incomparable(maximal)) {
      throw InvalidInput("cones do not form a bisection");
    }
    cones_ = canonicalize(arity, std::move(maximal)).cones_;
  }

  CnElement canonicalize(std::size_t arity, std::vector<CnElement::Cone> cones) {
    std::set<CnElement::Cone> current(cones.begin(), cones.end());
    for (bool merged = true; merged;) {
      merged = false;
      // parent cone -> letters of its children present
      std::map<CnElement::Cone, std::vector<bool>> families;
      for (auto const& [x, y] : current) {
        if (x.empty() || y.empty() || x.back() != y.back()) {
          continue;
        }
        CnElement::Cone parent{Word(x.begin(), x.end() - 1), Word(y.begin(), y.end() - 1)};
        auto&           seen = families[parent];
        seen.resize(arity, false);
        seen[x.back()] = true;
      }
      for (auto const& [parent, seen] : families) {
        if (std::count(seen.begin(), seen.end(), true) != static_cast<std::ptrdiff_t>(arity)) {
          continue;
        }
        for (Letter c = 0; c < arity; ++c) {
          current.erase({concat(parent.first, {c}), concat(parent.second, {c})});
        }
        current.insert(parent);
        merged = true;
      }
    }
    return CnElement(arity, std::vector<CnElement::Cone>(current.begin(), current.end()),
                     CnElement::Trusted{});
  }

  std::size_t CnElement::max_length() const noexcept {
    std::size_t m = 0;
    for (auto const& [x, y] : cones_) {
      m = std::max({m, x.size(), y.size()});
    }
    return m;
  }

  CnElement CnElement::inverse() const {
    std::vector<Cone> swapped;
    for (auto const& [x, y] : cones_) {
      swapped.emplace_back(y, x);
    }
    std::sort(swapped.begin(), swapped.end());
    return CnElement(arity_, std::move(swapped), Trusted{});
  }

  CnElement psi(PolyElement const& a, std::size_t arity) {
    if (a.zero) {
      return CnElement::zero(arity);
    }
    return CnElement(arity, {CnElement::Cone{a.x, a.y}});
  }

  CnElement cn_mul(CnElement const& A, CnElement const& B) {
    if (A.arity() != B.arity()) {
      throw PreconditionError("elements of different C_n");
    }
    std::vector<CnElement::Cone> out;
    for (auto const& [x, y] : A.cones()) {
      for (auto const& [u, v] : B.cones()) {
        auto p = poly_mul(PolyElement::pair(x, y), PolyElement::pair(u, v));
        if (!p.zero) {
          out.emplace_back(p.x, p.y);
        }
      }
    }
    return CnElement(A.arity(), std::move(out));
  }

  std::optional<CnElement> cn_join(CnElement const& A, CnElement const& B) {
    if (A.arity() != B.arity()) {
      throw PreconditionError("elements of different C_n");
    }
    auto all = A.cones();
    all.insert(all.end(), B.cones().begin(), B.cones().end());
    if (!cones_form_bisection(all)) {
      return std::nullopt;
    }
    return CnElement(A.arity(), std::move(all));
  }

  bool is_maximal_prefix_code(std::vector<Word> const& code, std::size_t arity) {
    if (code.empty()) {
      return false;
    }
    std::set<Word> words(code.begin(), code.end());
    if (words.size() != code.size()) {
      return false;
    }
    std::set<Word> inner;  // proper prefixes
    for (auto const& w : words) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        inner.emplace(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      }
    }
    for (auto const& p : inner) {
      if (words.count(p)) {
        return false;  // a codeword is a prefix of another
      }
      for (Letter c = 0; c < arity; ++c) {
        auto child = concat(p, {c});
        if (!words.count(child) && !inner.count(child)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_unit(CnElement const& A) {
    std::vector<Word> xs, ys;
    for (auto const& [x, y] : A.cones()) {
      xs.push_back(x);
      ys.push_back(y);
    }
    return is_maximal_prefix_code(xs, A.arity()) && is_maximal_prefix_code(ys, A.arity());
  }

  std::string format_cn(CnElement const& A) {
    std::string out = "{";
    for (auto const& [x, y] : A.cones()) {
      out += (out.size() > 1 ? ", " : "") + format_word(x) + "/" + format_word(y);
    }
    return out + "}";
  }

  CnElement parse_cn(std::string_view text, std::size_t arity) {
    check_arity(arity);
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      throw InvalidInput("expected {x/y, ...}");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<CnElement::Cone> cones;
    while (!text.empty()) {
      auto comma = text.find(',');
      auto item  = trim(text.substr(0, comma));
      auto slash = item.find('/');
      if (slash == std::string_view::npos) {
        throw InvalidInput("expected x/y in '" + std::string(item) + "'");
      }
      cones.emplace_back(parse_word(item.substr(0, slash), arity),
                         parse_word(item.substr(slash + 1), arity));
      text = comma == std::string_view::npos ? std::string_view{} : trim(text.substr(comma + 1));
    }
    return CnElement(arity, std::move(cones));
  }

  std::map<Word, Word> finite_depth_oracle(CnElement const& A, std::size_t depth) {
    if (depth < A.max_length()) {
      throw PreconditionError("oracle depth below the longest word");
    }
    std::map<Word, Word> out;
    auto const           n = A.arity();
    for (auto const& [x, y] : A.cones()) {
      auto const len = depth - y.size();
      Word       w(len, 0);
      // odometer over all words of length len
      while (true) {
        out.emplace(concat(y, w), concat(x, w));
        std::size_t i = len;
        while (i > 0 && w[i - 1] + 1u == n) {
          w[--i] = 0;
        }
        if (i == 0) {
          break;
        }
        ++w[i - 1];
      }
    }
    return out;
  }

  // ------------------------------------------------- eventually periodic

  EventuallyPeriodicWord::EventuallyPeriodicWord(Word u, Word v) : u_(std::move(u)), v_(std::move(v)) {
    if (v_.empty()) {
      throw InvalidInput("empty period");
    }
    v_ = primitive_root(v_);
    while (!u_.empty() && u_.back() == v_.back()) {
      std::rotate(v_.begin(), v_.end() - 1, v_.end());
      u_.pop_back();
    }
  }

  Letter EventuallyPeriodicWord::at(std::size_t i) const {
    return i < u_.size() ? u_[i] : v_[(i - u_.size()) % v_.size()];
  }

  Word EventuallyPeriodicWord::prefix(std::size_t length) const {
    Word out(length);
    for (std::size_t i = 0; i < length; ++i) {
      out[i] = at(i);
    }
    return out;
  }

  EventuallyPeriodicWord EventuallyPeriodicWord::drop(std::size_t k) const {
    if (k <= u_.size()) {
      return EventuallyPeriodicWord(poly::drop(u_, k), v_);
    }
    Word v = v_;
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>((k - u_.size()) % v.size()),
                v.end());
    return EventuallyPeriodicWord({}, std::move(v));
  }

  EventuallyPeriodicWord EventuallyPeriodicWord::prepend(Word const& p) const {
    return EventuallyPeriodicWord(concat(p, u_), v_);
  }

  std::string format_infinite(EventuallyPeriodicWord const& w) {
    auto u = w.preperiod().empty() ? std::string{} : format_word(w.preperiod());
    return u + "(" + format_word(w.period()) + ")^w";
  }

  EventuallyPeriodicWord parse_infinite(std::string_view text, std::size_t arity) {
    check_arity(arity);
    text       = trim(text);
    auto open  = text.find('(');
    auto close = text.find(")^w");
    if (open == std::string_view::npos || close == std::string_view::npos || close < open
        || close + 3 != text.size()) {
      throw InvalidInput("expected u(v)^w, got '" + std::string(text) + "'");
    }
    auto v = parse_word(text.substr(open + 1, close - open - 1), arity);
    if (v.empty()) {
      throw InvalidInput("empty period");
    }
    return EventuallyPeriodicWord(parse_word(text.substr(0, open), arity), std::move(v));
  }

  // ------------------------------------------------------- Cuntz arrows

  CuntzArrow::CuntzArrow(Word x, Word y, EventuallyPeriodicWord w)
      : x_(std::move(x)), y_(std::move(y)), w_(std::move(w)) {
    Word absorbed;
    while (!x_.empty() && !y_.empty() && x_.back() == y_.back()) {
      absorbed.insert(absorbed.begin(), x_.back());
      x_.pop_back();
      y_.pop_back();
    }
    if (!absorbed.empty()) {
      w_ = w_.prepend(absorbed);
    }
  }

  CuntzArrow::CuntzArrow(Word x, std::int64_t k, Word y, EventuallyPeriodicWord w)
      : CuntzArrow(x, y, w) {
    if (k != static_cast<std::int64_t>(x.size()) - static_cast<std::int64_t>(y.size())) {
      throw InvalidInput("k must equal |x| - |y|");
    }
  }

  std::string format_arrow(CuntzArrow const& g) {
    return "(" + format_infinite(g.target()) + ", " + std::to_string(g.k()) + ", "
           + format_infinite(g.source()) + ")";
  }

  std::optional<CuntzArrow> cuntz_compose(CuntzArrow const& g, CuntzArrow const& h) {
    if (!(g.source() == h.target())) {
      return std::nullopt;
    }
    // y_g w_g = x_h w_h; move the longer of y_g, x_h into the other tail.
    if (g.y().size() <= h.x().size()) {
      auto p = drop(h.x(), g.y().size());
      return CuntzArrow(concat(g.x(), p), h.y(), h.tail());
    }
    auto q = drop(g.y(), h.x().size());
    return CuntzArrow(g.x(), concat(h.y(), q), g.tail());
  }

  CuntzArrow ultrafilter_to_arrow(PolyElement const& rep, EventuallyPeriodicWord const& z) {
    if (rep.zero) {
      throw PreconditionError("the zero does not lie in an ultrafilter");
    }
    if (z.prefix(rep.y.size()) != rep.y) {
      throw PreconditionError(format_word(rep.y) + " is not a prefix of " + format_infinite(z));
    }
    return CuntzArrow(rep.x, rep.y, z.drop(rep.y.size()));
  }

  UltrafilterPoint arrow_to_ultrafilter(CuntzArrow const& g) {
    return UltrafilterPoint{PolyElement::pair(g.x(), g.y()), g.source()};
  }

  bool ultrafilter_contains(CuntzArrow const& g, PolyElement const& a) {
    if (a.zero) {
      return false;
    }
    auto const k = static_cast<std::int64_t>(a.x.size()) - static_cast<std::int64_t>(a.y.size());
    if (k != g.k()) {
      return false;
    }
    auto target = g.target();
    auto source = g.source();
    return target.prefix(a.x.size()) == a.x && source.prefix(a.y.size()) == a.y
           && target.drop(a.x.size()) == source.drop(a.y.size());
  }

  // ------------------------------------------------------------ random

  Word random_word(std::mt19937_64& rng, std::size_t arity, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<int>         letter(0, static_cast<int>(arity) - 1);
    Word                                       w(len(rng));
    for (auto& c : w) {
      c = static_cast<Letter>(letter(rng));
    }
    return w;
  }

  std::vector<Word> random_maximal_code(std::mt19937_64& rng, std::size_t arity,
                                        std::size_t splits) {
    std::vector<Word> leaves{Word{}};
    for (std::size_t s = 0; s < splits; ++s) {
      std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
      auto                                       i    = pick(rng);
      Word                                       leaf = leaves[i];
      leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
      for (Letter c = 0; c < arity; ++c) {
        leaves.push_back(concat(leaf, {c}));
      }
    }
    return leaves;
  }

  CnElement random_cn(std::mt19937_64& rng, std::size_t arity, std::size_t splits) {
    std::uniform_int_distribution<std::size_t> s(0, splits);
    auto xs = random_maximal_code(rng, arity, s(rng));
    auto ys = random_maximal_code(rng, arity, s(rng));
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::uniform_int_distribution<std::size_t> m(0, std::min(xs.size(), ys.size()));
    std::vector<CnElement::Cone>               cones;
    for (std::size_t i = 0, count = m(rng); i < count; ++i) {
      cones.emplace_back(xs[i], ys[i]);
    }
    return CnElement(arity, std::move(cones));
  }

  CnElement random_unit(std::mt19937_64& rng, std::size_t arity, std::size_t splits) {
    std::uniform_int_distribution<std::size_t> s(0, splits);
    auto const                                 count = s(rng);
    auto xs = random_maximal_code(rng, arity, count);
    auto ys = random_maximal_code(rng, arity, count);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<CnElement::Cone> cones;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      cones.emplace_back(xs[i], ys[i]);
    }
    return CnElement(arity, std::move(cones));
  }

  EventuallyPeriodicWord random_infinite(std::mt19937_64& rng, std::size_t arity,
                                         std::size_t max_preperiod, std::size_t max_period) {
    Word v;
    while (v.empty()) {
      v = random_word(rng, arity, max_period);
    }
    return EventuallyPeriodicWord(random_word(rng, arity, max_preperiod), std::move(v));
  }

}  // namespace stonework::poly
