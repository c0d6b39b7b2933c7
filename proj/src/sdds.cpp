#include "srcfg/sdds.hpp"

#include <algorithm>
#include <set>

#include "srcfg/errors.hpp"
#include "srcfg/parallel.hpp"

namespace srcfg {

DifferenceProfile difference_profile(const Group& g, const std::vector<GroupElement>& d) {
  const std::uint32_t n = g.order();
  DifferenceProfile out;
  out.deficient = true;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (i == j) continue;
      const GroupElement x = g.ldiff(d[i], d[j]);
      if (x == g.identity() || seen[x]) out.deficient = false;
      seen[x] = true;
      out.delta.push_back(x);
    }
  std::sort(out.delta.begin(), out.delta.end());
  out.n_of.assign(n, 0);
  for (GroupElement x = 0; x < n; ++x) {
    if (x == g.identity()) continue;
    std::uint32_t count = 0;
    for (GroupElement y : out.delta) count += seen[g.mul(x, y)];
    out.n_of[x] = count;
  }
  return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> sdds_check(const Group& g, const std::vector<GroupElement>& d) {
  for (GroupElement a : d)
    if (a >= g.order()) return std::nullopt;
  if (d.size() < 2) return std::nullopt;
  const auto profile = difference_profile(g, d);
  if (!profile.deficient) return std::nullopt;
  std::vector<bool> in_delta(g.order(), false);
  for (GroupElement x : profile.delta) in_delta[x] = true;
  std::optional<std::int64_t> lambda, mu;
  for (GroupElement x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    auto& slot = in_delta[x] ? lambda : mu;
    if (!slot) slot = profile.n_of[x];
    else if (*slot != profile.n_of[x]) return std::nullopt;
  }
  if (!lambda) return std::nullopt;
  return std::make_pair(*lambda, mu.value_or(0));
}

namespace {

class SddsSearcher {
 public:
  SddsSearcher(const Group& g, std::uint32_t k, std::int64_t lambda, std::int64_t mu)
      : g_(g), k_(k), lambda_(lambda), mu_(mu), cap_(std::max(lambda, mu)), used_(g.order(), false), n_(g.order(), 0) {}

  // Every SDDS of the form {identity, second, larger elements...}.
  std::vector<std::vector<GroupElement>> run(GroupElement second) {
    chosen_ = {g_.identity()};
    if (push(second)) extend(second);
    return std::move(found_);
  }

 private:
  const Group& g_;
  std::uint32_t k_;
  std::int64_t lambda_, mu_, cap_;
  std::vector<bool> used_;
  std::vector<std::int64_t> n_;
  std::vector<GroupElement> delta_;
  std::vector<GroupElement> chosen_;
  std::vector<GroupElement> touched_;  // n_ increments, undone in reverse
  std::vector<std::vector<GroupElement>> found_;

  bool bump(GroupElement x) {
    touched_.push_back(x);
    ++n_[x];
    return n_[x] <= cap_ && !(used_[x] && n_[x] > lambda_);
  }

  // Adds a to the set; on failure the state is left for pop() to restore.
  bool push(GroupElement a) {
    chosen_.push_back(a);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < chosen_.size() && ok; ++i) {
      for (GroupElement y : {g_.ldiff(chosen_[i], a), g_.ldiff(a, chosen_[i])}) {
        if (y == g_.identity() || used_[y]) {
          ok = false;
          break;
        }
        for (GroupElement d : delta_) {
          ok = bump(g_.mul(y, g_.inv(d))) && ok;
          ok = bump(g_.mul(d, g_.inv(y))) && ok;
        }
        used_[y] = true;
        delta_.push_back(y);
        if (n_[y] > lambda_) ok = false;
        if (!ok) break;
      }
    }
    return ok;
  }

  void pop(std::size_t delta_mark, std::size_t touched_mark) {
    chosen_.pop_back();
    while (delta_.size() > delta_mark) {
      used_[delta_.back()] = false;
      delta_.pop_back();
    }
    while (touched_.size() > touched_mark) {
      --n_[touched_.back()];
      touched_.pop_back();
    }
  }

  void extend(GroupElement last) {
    if (chosen_.size() == k_) {
      const auto lm = sdds_check(g_, chosen_);
      if (lm && lm->first == lambda_ && lm->second == mu_) found_.push_back(chosen_);
      return;
    }
    const std::uint32_t need = k_ - static_cast<std::uint32_t>(chosen_.size());
    for (GroupElement a = last + 1; a + need <= g_.order(); ++a) {
      if (a == g_.identity()) continue;
      const std::size_t dm = delta_.size(), tm = touched_.size();
      if (push(a)) extend(a);
      pop(dm, tm);
    }
  }
};

// Identity first, the rest ascending.
std::vector<GroupElement> normal_order(const Group& g, std::vector<GroupElement> d) {
  std::sort(d.begin(), d.end(), [&](GroupElement a, GroupElement b) {
    if (a == g.identity() || b == g.identity()) return a == g.identity() && b != g.identity();
    return a < b;
  });
  return d;
}

}  // namespace

std::vector<std::vector<GroupElement>> sdds_search(const Group& g, std::uint32_t k, std::int64_t lambda,
                                                   std::int64_t mu, const SddsSearchOptions& options) {
  const std::int64_t v = g.order(), d = static_cast<std::int64_t>(k) * (k - 1);
  if (k < 3) throw InconsistentParameters("k must be at least 3");
  if (lambda < 0 || mu < 0 || (v - 1 - d) * mu != d * (d - 1 - lambda))
    throw InconsistentParameters("(" + std::to_string(v) + "_" + std::to_string(k) + ";" + std::to_string(lambda) +
                                 "," + std::to_string(mu) + ") violates (v-1-k(k-1))mu = k(k-1)(k(k-1)-1-lambda)");

  std::vector<GroupElement> seconds;
  for (GroupElement a = 0; a < g.order(); ++a)
    if (a != g.identity()) seconds.push_back(a);
  std::vector<std::vector<std::vector<GroupElement>>> per_root(seconds.size());
  parallel_for(seconds.size(), [&](std::size_t i) {
    SddsSearcher s(g, k, lambda, mu);
    per_root[i] = s.run(seconds[i]);
  });

  std::vector<std::vector<GroupElement>> raw;
  for (auto& chunk : per_root)
    for (auto& d_set : chunk) raw.push_back(std::move(d_set));

  std::vector<std::vector<GroupElement>> out;
  if (options.normalization == Normalization::ContainsIdentity) {
    for (const auto& set : raw) {
      bool smallest = true;
      for (GroupElement x : set) {
        std::vector<GroupElement> t;
        for (GroupElement y : set) t.push_back(g.ldiff(x, y));
        if (normal_order(g, t) < set) {
          smallest = false;
          break;
        }
      }
      if (smallest) out.push_back(set);
    }
  } else {
    std::set<std::vector<GroupElement>> all;
    for (const auto& set : raw)
      for (GroupElement h = 0; h < g.order(); ++h) {
        std::vector<GroupElement> t;
        for (GroupElement y : set) t.push_back(g.mul(h, y));
        std::sort(t.begin(), t.end());
        all.insert(std::move(t));
      }
    out.assign(all.begin(), all.end());
  }
  std::sort(out.begin(), out.end());
  if (options.limit && out.size() > options.limit) out.resize(options.limit);
  return out;
}

const std::vector<PublishedSdds>& published_sdds() {
  static const std::vector<PublishedSdds> sets = {
      {"z13", "cyclic:13", {"7", "8", "11"}, {13, 3, 2, 3}},
      {"z4xs4",
       "product(cyclic:4,symmetric:4)",
       {"(0,id)", "(1,(1,4)(2,3))", "(1,(1,3,4,2))", "(1,(1,4,3))", "(2,(1,2,4))"},
       {96, 5, 4, 4}},
      {"s5",
       "symmetric:5",
       {"id", "(1,2,5,3,4)", "(1,3,4,2,5)", "(1,5,3,2,4)", "(1,4)(2,3,5)", "(1,4,5,2)", "(1,2,4)", "(1,2,5)"},
       {120, 8, 28, 24}},
      {"frobenius31_5",
       "frobenius31_5",
       {"id", "f^12g^4", "f^15g", "f^18", "f^20g^2", "f^26g^3", "f^30"},
       {155, 7, 17, 9}},
      {"q8xq8-d1",
       "product(Q8,Q8)",
       {"(1,1)", "(i,-k)", "(j,k)", "(k,-j)", "(-i,j)", "(-j,i)", "(-k,-i)"},
       {64, 7, 26, 30}},
      {"q8xq8-d2",
       "product(Q8,Q8)",
       {"(1,1)", "(i,-k)", "(j,j)", "(k,-j)", "(-i,-i)", "(-j,i)", "(-k,k)"},
       {64, 7, 26, 30}},
  };
  return sets;
}

const PublishedSdds& published_sdds(const std::string& id) {
  for (const auto& s : published_sdds())
    if (s.id == id) return s;
  throw InvalidSpec("unknown published difference set '" + id + "'");
}

}  // namespace srcfg
