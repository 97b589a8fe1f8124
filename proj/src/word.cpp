#include "foxcalc/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "text_util.hpp"

namespace foxcalc {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "parse_error";
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::NotBoundaryFixing: return "not_boundary_fixing";
    case ErrorCode::NotPureBraid: return "not_pure_braid";
    case ErrorCode::NotMonomial: return "not_monomial";
    case ErrorCode::DepthPrecondition: return "depth_precondition";
    case ErrorCode::NontrivialHomology: return "nontrivial_homology_action";
    case ErrorCode::InvalidCylinder: return "invalid_cylinder";
    case ErrorCode::Singular: return "singular_matrix";
    case ErrorCode::GenusMismatch: return "genus_mismatch";
    case ErrorCode::DegeneratePresentation: return "degenerate_presentation";
    case ErrorCode::RhoInconsistent: return "rho_inconsistent";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::Precondition: return "precondition_failed";
    case ErrorCode::Io: return "io_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Internal: return "internal_error";
  }
  return "unknown_error";
}

namespace {

void push_letter(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

}  // namespace

Word::Word(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw Error(ErrorCode::InvalidArgument, "word letter 0 is not a generator");
    push_letter(letters_, l);
  }
}

Word Word::generator(int index, int exponent) {
  if (index < 1) throw Error(ErrorCode::IndexOutOfRange, "generator index must be positive");
  std::vector<int> letters(static_cast<std::size_t>(std::abs(exponent)), exponent > 0 ? index : -index);
  Word w;
  w.letters_ = std::move(letters);
  return w;
}

int Word::max_index() const noexcept {
  int m = 0;
  for (int l : letters_) m = std::max(m, std::abs(l));
  return m;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

Word Word::pow(int exponent) const {
  const Word base = exponent >= 0 ? *this : inverse();
  Word out;
  for (int i = 0; i < std::abs(exponent); ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& b) {
  for (int l : b.letters_) push_letter(letters_, l);
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out *= b;
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return a.letters_ <=> b.letters_;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int l : w.letters()) {
    const auto idx = static_cast<std::size_t>(std::abs(l) - 1);
    if (idx >= images.size())
      throw Error(ErrorCode::RankMismatch, "letter x" + std::to_string(std::abs(l)) + " outside the endomorphism's rank");
    out *= l > 0 ? images[idx] : images[idx].inverse();
  }
  return out;
}

// Endomorphism -------------------------------------------------------------

Endomorphism::Endomorphism(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (rank < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
  if (images_.size() != static_cast<std::size_t>(rank))
    throw Error(ErrorCode::RankMismatch, "endomorphism needs exactly one image per generator");
  for (const auto& w : images_)
    if (w.max_index() > rank) throw Error(ErrorCode::IndexOutOfRange, "image uses a generator beyond the rank");
}

Endomorphism Endomorphism::identity(int rank) {
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(i));
  return Endomorphism(rank, std::move(images));
}

Word Endomorphism::apply(const Word& w) const {
  if (w.max_index() > rank_) throw Error(ErrorCode::RankMismatch, "word rank exceeds endomorphism rank");
  return substitute(w, images_);
}

Word apply_endo(const Endomorphism& phi, const Word& w) { return phi.apply(w); }

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.rank() != psi.rank()) throw Error(ErrorCode::RankMismatch, "composing endomorphisms of different rank");
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const auto& w : psi.images()) images.push_back(phi.apply(w));
  return Endomorphism(phi.rank(), std::move(images));
}

void GroupPresentation::check() const {
  if (rank < 0) throw Error(ErrorCode::InvalidArgument, "negative rank");
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(rank))
    throw Error(ErrorCode::InvalidArgument, "label count differs from rank");
  for (const auto& r : relators)
    if (r.max_index() > rank) throw Error(ErrorCode::IndexOutOfRange, "relator uses a generator beyond the rank");
}

Word boundary_word(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidArgument, "genus must be at least 1");
  Word zeta;
  for (int i = 1; i <= genus; ++i) zeta *= commutator(Word::generator(i), Word::generator(genus + i));
  return zeta;
}

bool fixes_boundary(const Endomorphism& phi, int genus) {
  if (phi.rank() != 2 * genus) throw Error(ErrorCode::RankMismatch, "endomorphism rank must be 2g");
  const Word zeta = boundary_word(genus);
  return phi.apply(zeta) == zeta;
}

// Parsing ------------------------------------------------------------------

namespace {

struct Token {
  std::string_view text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({text.substr(start, i - start), start});
  }
  return out;
}

template <class Lookup>
Word parse_tokens(std::string_view text, Lookup&& lookup) {
  const auto tokens = tokenize(text);
  if (tokens.size() == 1 && tokens[0].text == "1") return {};
  std::vector<int> letters;
  for (const auto& tok : tokens) {
    std::string_view name = tok.text;
    long long exponent = 1;
    if (const auto caret = name.find('^'); caret != std::string_view::npos) {
      const auto parsed = detail::to_integer(name.substr(caret + 1));
      if (!parsed) throw ParseError("malformed exponent in token '" + std::string(tok.text) + "'", tok.position + caret + 1);
      if (*parsed > 100000 || *parsed < -100000) throw ParseError("exponent too large", tok.position + caret + 1);
      exponent = *parsed;
      name = name.substr(0, caret);
    }
    const int index = lookup(name, tok.position);
    for (long long k = 0; k < std::llabs(exponent); ++k) letters.push_back(exponent > 0 ? index : -index);
  }
  return Word(std::move(letters));
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  return parse_tokens(text, [rank](std::string_view name, std::size_t pos) {
    if (name.size() < 2 || name[0] != 'x') throw ParseError("expected a generator token x<k>, got '" + std::string(name) + "'", pos);
    const auto k = detail::to_integer(name.substr(1));
    if (!k || *k < 1) throw ParseError("bad generator index in '" + std::string(name) + "'", pos + 1);
    if (*k > rank)
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator x" + std::to_string(*k) + " exceeds rank " + std::to_string(rank));
    return static_cast<int>(*k);
  });
}

Word parse_word_named(std::string_view text, const std::map<std::string, int, std::less<>>& names) {
  return parse_tokens(text, [&names](std::string_view name, std::size_t pos) {
    const auto it = names.find(name);
    if (it == names.end()) throw ParseError("unknown generator '" + std::string(name) + "'", pos);
    return it->second;
  });
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const int run = static_cast<int>(j - i);
    const int idx = std::abs(l[i]);
    if (!out.empty()) out += ' ';
    out += names.empty() ? "x" + std::to_string(idx) : names.at(static_cast<std::size_t>(idx - 1));
    const int e = l[i] > 0 ? run : -run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

std::string to_string(const Word& w) { return to_string(w, {}); }

Endomorphism parse_endomorphism(std::string_view text) {
  std::map<int, Word> images;
  std::vector<std::pair<int, std::string_view>> raw;
  int rank = 0;
  for (const auto& line : detail::content_lines(text)) {
    const auto arrow = line.text.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("line " + std::to_string(line.number) + ": expected 'x<k> -> <word>'", 0);
    const auto lhs = detail::trim(line.text.substr(0, arrow));
    if (lhs.size() < 2 || lhs[0] != 'x')
      throw ParseError("line " + std::to_string(line.number) + ": left side must be x<k>", 0);
    const auto k = detail::to_integer(lhs.substr(1));
    if (!k || *k < 1) throw ParseError("line " + std::to_string(line.number) + ": bad generator index", 1);
    raw.emplace_back(static_cast<int>(*k), line.text.substr(arrow + 2));
    rank = std::max(rank, static_cast<int>(*k));
  }
  if (static_cast<int>(raw.size()) != rank)
    throw ParseError("endomorphism must list each of x1..x" + std::to_string(rank) + " exactly once", 0);
  for (const auto& [k, body] : raw) {
    if (images.count(k)) throw ParseError("generator x" + std::to_string(k) + " listed twice", 0);
    images.emplace(k, parse_word(body, rank));
  }
  std::vector<Word> ordered;
  for (auto& [k, w] : images) ordered.push_back(w);
  return Endomorphism(rank, std::move(ordered));
}

std::string to_string(const Endomorphism& phi) {
  std::string out;
  for (int i = 1; i <= phi.rank(); ++i) {
    const auto body = to_string(phi.image(i));
    out += "x" + std::to_string(i) + " -> " + (body.empty() ? "1" : body) + "\n";
  }
  return out;
}

GroupPresentation parse_presentation(std::string_view text) {
  GroupPresentation p;
  bool have_rank = false;
  std::vector<std::string_view> rels;
  for (const auto& line : detail::content_lines(text)) {
    const auto [key, rest] = detail::split_keyword(line.text);
    if (key == "rank") {
      const auto n = detail::to_integer(rest);
      if (!n || *n < 0) throw ParseError("line " + std::to_string(line.number) + ": bad rank", 0);
      p.rank = static_cast<int>(*n);
      have_rank = true;
    } else if (key == "rel") {
      if (!have_rank) throw ParseError("line " + std::to_string(line.number) + ": 'rel' before 'rank'", 0);
      rels.push_back(rest);
    } else if (key == "rho1") {
      continue;  // consumed by callers that need it
    } else {
      throw ParseError("line " + std::to_string(line.number) + ": unknown keyword '" + std::string(key) + "'", 0);
    }
  }
  if (!have_rank) throw ParseError("missing 'rank' header", 0);
  for (auto r : rels) p.relators.push_back(parse_word(r, p.rank));
  return p;
}

std::string to_string(const GroupPresentation& p) {
  std::string out = "rank " + std::to_string(p.rank) + "\n";
  for (const auto& r : p.relators) {
    const auto body = to_string(r);
    out += "rel " + (body.empty() ? "1" : body) + "\n";
  }
  return out;
}

}  // namespace foxcalc
