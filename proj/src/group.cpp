#include <random>

#include "plab/error.hpp"
#include "plab/group.hpp"

namespace plab {

const char* backend_name(Backend b) noexcept {
  switch (b) {
    case Backend::finite_enumerated: return "FiniteEnumerated";
    case Backend::free_group_ball: return "FreeGroupBall";
    case Backend::explicit_table: return "ExplicitTable";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_table(const std::string& why) { raise(ErrorCode::bad_group_table, {}, why); }

}  // namespace

RealizedGroup::RealizedGroup(std::vector<std::vector<GroupElement>> table,
                             std::vector<GroupElement> generator_images, Backend backend)
    : table_(std::move(table)), generator_images_(std::move(generator_images)), backend_(backend) {
  const std::size_t n = table_.size();
  if (n == 0) bad_table("empty table");
  for (const auto& row : table_) {
    if (row.size() != n) bad_table("table is not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n || seen[v]) bad_table("row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table_[i][j]]) bad_table("column is not a permutation");
      seen[table_[i][j]] = true;
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (table_[0][g] != g || table_[g][0] != g) bad_table("element 0 is not the identity");

  inverse_.assign(n, 0);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g][h] == 0) {
        if (table_[h][g] != 0) bad_table("left and right inverses differ");
        inverse_[g] = static_cast<GroupElement>(h);
      }

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) bad_table("not associative");
  };
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < 4096; ++k) assoc(pick(rng), pick(rng), pick(rng));
  }

  std::vector<bool> reached(n, false);
  std::vector<GroupElement> frontier{0};
  reached[0] = true;
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (auto gen : generator_images_) {
      if (gen >= n) bad_table("generator image out of range");
      auto next = table_[frontier[i]][gen];
      if (!reached[next]) {
        reached[next] = true;
        frontier.push_back(next);
      }
    }
  if (frontier.size() != n) bad_table("generator images do not generate the group");
}

GroupElement RealizedGroup::evaluate(const Word& w) const {
  GroupElement g = 0;
  for (const auto& l : w) {
    auto x = generator_images_.at(l.generator);
    g = table_[g][l.inverse ? inverse_[x] : x];
  }
  return g;
}

std::size_t RealizedGroup::element_order(GroupElement g) const {
  std::size_t k = 1;
  for (GroupElement x = g; x != 0; x = table_[x][g]) ++k;
  return k;
}

MarkedGroup MarkedGroup::finite(RealizedGroup g, std::vector<std::string> generator_names) {
  if (g.generator_images().size() != generator_names.size())
    raise(ErrorCode::invalid_argument, {}, "generator names do not match generator images");
  MarkedGroup m;
  m.names_ = std::move(generator_names);
  m.group_ = std::make_shared<const RealizedGroup>(std::move(g));
  return m;
}

MarkedGroup MarkedGroup::free(std::vector<std::string> generator_names) {
  if (generator_names.empty()) raise(ErrorCode::empty_generator_list);
  MarkedGroup m;
  m.names_ = std::move(generator_names);
  return m;
}

MarkedGroup MarkedGroup::from_presentation(const Presentation& P, std::size_t max_cosets) {
  if (P.relators().empty()) return free(P.generators());
  try {
    return finite(todd_coxeter(P, max_cosets), P.generators());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::out_of_bounds)
      raise(ErrorCode::backend_inconclusive, e.indices(), "word problem not resolved within the coset bound");
    throw;
  }
}

Backend MarkedGroup::backend() const noexcept {
  return group_ ? group_->backend() : Backend::free_group_ball;
}

std::vector<std::int64_t> MarkedGroup::key(const Word& w) const {
  if (group_) return {static_cast<std::int64_t>(group_->evaluate(w))};
  std::vector<std::int64_t> out;
  for (const auto& l : free_reduce(w))
    out.push_back(l.inverse ? -static_cast<std::int64_t>(l.generator) - 1
                            : static_cast<std::int64_t>(l.generator) + 1);
  return out;
}

}  // namespace plab
