#include "plab/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "plab/error.hpp"

namespace plab {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long exponent = static_cast<long>(j - i) * (w[i].inverse ? -1 : 1);
    if (!out.empty()) out += ' ';
    out += names.at(w[i].generator);
    if (exponent != 1) out += '^' + std::to_string(exponent);
    i = j;
  }
  return out;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  for (auto& r : relators) {
    auto reduced = free_reduce(r);
    if (reduced.empty())
      ++dropped_;
    else
      relators_.push_back(std::move(reduced));
  }
}

Presentation Presentation::verbatim(std::vector<std::string> generators, std::vector<Word> relators) {
  Presentation p;
  p.generators_ = std::move(generators);
  p.relators_ = std::move(relators);
  return p;
}

std::size_t Presentation::max_relator_length() const noexcept {
  std::size_t m = 0;
  for (const auto& r : relators_) m = std::max(m, r.size());
  return m;
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "gens: ";
  for (std::size_t i = 0; i < generators_.size(); ++i) out << (i ? ", " : "") << generators_[i];
  out << "\nrels: ";
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    out << (i ? ", " : "");
    // Spell letters out one by one so unreduced relators survive a round trip.
    for (std::size_t j = 0; j < relators_[i].size(); ++j) {
      const auto& l = relators_[i][j];
      out << (j ? " " : "") << generators_[l.generator] << (l.inverse ? "^-1" : "");
    }
  }
  out << '\n';
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word parse_word(std::string_view text, const std::vector<std::string>& gens) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = std::string_view(token).substr(0, caret);
      std::string_view exp = std::string_view(token).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (exp.empty() || ec != std::errc() || ptr != exp.data() + exp.size())
        throw Error(ErrorCode::bad_exponent, "BadExponent: " + token);
    }
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) throw Error(ErrorCode::unknown_generator, "UnknownGenerator: " + std::string(name));
    Letter l{static_cast<std::uint32_t>(it - gens.begin()), exponent < 0};
    for (long k = 0; k < std::labs(exponent); ++k) w.push_back(l);
  }
  return w;
}

}  // namespace

ParsedPresentation parse_presentation(std::string_view text) {
  std::vector<std::string_view> sections;
  for (auto line : split(text, '\n')) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (auto part : split(line, ';'))
      if (!trim(part).empty()) sections.push_back(trim(part));
  }

  std::vector<std::string> gens;
  std::vector<std::string_view> rel_texts;
  bool saw_gens = false;
  for (auto section : sections) {
    auto colon = section.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::parse_error, "ParseError: expected 'gens:' or 'rels:' in '" +
                                              std::string(section) + "'");
    auto key = trim(section.substr(0, colon));
    auto body = trim(section.substr(colon + 1));
    if (key == "gens") {
      saw_gens = true;
      if (body.empty()) continue;
      for (auto g : split(body, ',')) {
        auto name = trim(g);
        if (!is_identifier(name))
          throw Error(ErrorCode::parse_error, "ParseError: bad generator name '" + std::string(name) + "'");
        if (std::find(gens.begin(), gens.end(), name) != gens.end())
          throw Error(ErrorCode::parse_error, "ParseError: duplicate generator '" + std::string(name) + "'");
        gens.emplace_back(name);
      }
    } else if (key == "rels") {
      if (body.empty()) continue;
      for (auto r : split(body, ',')) rel_texts.push_back(trim(r));
    } else {
      throw Error(ErrorCode::parse_error, "ParseError: unknown section '" + std::string(key) + "'");
    }
  }
  if (!saw_gens || gens.empty()) throw Error(ErrorCode::empty_generator_list, "EmptyGeneratorList");

  std::vector<Word> relators;
  ParsedPresentation out;
  for (auto r : rel_texts) {
    if (r.empty()) throw Error(ErrorCode::parse_error, "ParseError: empty relator");
    relators.push_back(parse_word(r, gens));
    if (free_reduce(relators.back()).empty())
      out.warnings.push_back("relator '" + std::string(r) + "' is freely trivial; dropped");
  }
  out.presentation = Presentation(std::move(gens), std::move(relators));
  return out;
}

}  // namespace plab
