#include "plab/permutoid.hpp"

#include <map>

#include "plab/error.hpp"

namespace plab {

namespace {

std::int64_t as_index(std::size_t i) { return static_cast<std::int64_t>(i); }

}  // namespace

Permutoid make_permutoid(std::size_t ground_size, std::vector<PartialPermutation> elements,
                         std::vector<std::string> names) {
  if (elements.empty()) raise(ErrorCode::missing_identity, {}, "no elements");
  if (names.empty())
    for (std::size_t i = 0; i < elements.size(); ++i) names.push_back("p" + std::to_string(i));
  if (names.size() != elements.size())
    raise(ErrorCode::invalid_argument, {}, "names and elements differ in length");
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].ground_size() != ground_size) raise(ErrorCode::ground_set_mismatch, {as_index(i)});

  std::map<std::vector<std::int32_t>, std::size_t> seen;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto [it, inserted] = seen.emplace(elements[i].images(), i);
    if (!inserted) raise(ErrorCode::duplicate_element, {as_index(it->second), as_index(i)});
  }

  Permutoid P;
  P.ground_size_ = ground_size;
  P.elements_ = std::move(elements);
  P.names_ = std::move(names);

  bool found_identity = false;
  for (std::size_t i = 0; i < P.elements_.size(); ++i) {
    if (P.elements_[i].is_identity()) {
      P.identity_ = i;
      found_identity = true;
      break;
    }
  }
  if (!found_identity) raise(ErrorCode::missing_identity);

  const std::size_t n = P.elements_.size();
  P.witness_.assign(n * n, Witness{});
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      auto pq = compose_partial(P.elements_[p], P.elements_[q]);
      Witness& w = P.witness_[p * n + q];
      if (!pq) {
        w = {WitnessKind::undefined, 0};
        continue;
      }
      w = {WitnessKind::no_witness, 0};
      for (std::size_t r = 0; r < n; ++r) {
        if (!P.elements_[r].extends(*pq)) continue;
        if (w.kind == WitnessKind::element)
          raise(ErrorCode::unique_extension_violated,
                {as_index(p), as_index(q), as_index(w.element), as_index(r)});
        w = {WitnessKind::element, r};
      }
    }
  }
  return P;
}

Permutoid validate_permutoid(std::size_t ground_size, const std::vector<ElementSpec>& elements) {
  if (ground_size == 0) raise(ErrorCode::invalid_argument, {}, "ground set must be non-empty");
  std::vector<PartialPermutation> built;
  std::vector<std::string> names;
  built.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    try {
      built.push_back(PartialPermutation::from_pairs(ground_size, elements[i].map));
    } catch (const Error& e) {
      raise(e.code(), {as_index(i)}, elements[i].name);
    }
    names.push_back(elements[i].name.empty() ? "p" + std::to_string(i) : elements[i].name);
  }
  return make_permutoid(ground_size, std::move(built), std::move(names));
}

Witness Permutoid::extension_witness(ElementIndex p, ElementIndex q) const {
  if (p >= size() || q >= size()) raise(ErrorCode::invalid_argument, {}, "element index out of range");
  return witness_[p * size() + q];
}

std::vector<WitnessTriple> Permutoid::witness_triples() const {
  std::vector<WitnessTriple> out;
  const std::size_t n = size();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const auto& w = witness_[p * n + q];
      if (w.kind == WitnessKind::element) out.push_back({p, q, w.element});
    }
  return out;
}

bool is_rigid_permutoid(const Permutoid& P) {
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j)
      if (P.element(i).agrees_somewhere(P.element(j))) return false;
  return true;
}

}  // namespace plab
