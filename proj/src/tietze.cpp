#include <algorithm>
#include <cstdlib>
#include <map>

#include "gemkit/pi1.hpp"

namespace gemkit {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

namespace {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(w);
  std::size_t a = 0, b = w.size();
  while (b - a >= 2 && w[a] == -w[b - 1]) {
    ++a;
    --b;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

Word least_rotation(const Word& w) {
  Word best = w;
  Word r = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best) best = r;
  }
  return best;
}

// Occurrences of each generator (1-based) in w.
std::map<int, int> occurrences(const Word& w) {
  std::map<int, int> out;
  for (int x : w) ++out[std::abs(x)];
  return out;
}

Word substitute(const Word& w, int gen, const Word& value) {
  Word out;
  const Word inv = inverse(value);
  for (int x : w) {
    if (x == gen) {
      out.insert(out.end(), value.begin(), value.end());
    } else if (x == -gen) {
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.push_back(x);
    }
  }
  return free_reduce(out);
}

void normalize(std::vector<Word>& relators) {
  for (auto& r : relators) r = canonical_relator(r);
  relators.erase(std::remove_if(relators.begin(), relators.end(), [](const Word& r) { return r.empty(); }),
                 relators.end());
  std::sort(relators.begin(), relators.end(),
            [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  relators.erase(std::unique(relators.begin(), relators.end()), relators.end());
}

// g = value where relator r = 1 contains g exactly once.
Word solve_for(const Word& r, int gen) {
  const auto pos = static_cast<std::size_t>(
      std::find_if(r.begin(), r.end(), [&](int x) { return std::abs(x) == gen; }) - r.begin());
  Word rotated(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
  rotated.insert(rotated.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
  const bool positive = rotated.front() > 0;
  Word rest(rotated.begin() + 1, rotated.end());
  return positive ? inverse(rest) : rest;
}

}  // namespace

Word canonical_relator(const Word& w) {
  const Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  return std::min(least_rotation(r), least_rotation(inverse(r)));
}

GroupPresentation tietze_simplify(const GroupPresentation& pres, const TietzeOptions& options) {
  std::vector<Word> rels = pres.all_relators();
  std::vector<bool> alive(static_cast<std::size_t>(pres.generators), true);

  auto eliminate = [&](int gen, const Word& value, std::size_t skip) {
    std::vector<Word> next;
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (k != skip) next.push_back(substitute(rels[k], gen, value));
    }
    rels = std::move(next);
    alive[static_cast<std::size_t>(gen - 1)] = false;
  };

  for (int pass = 0; pass < options.max_passes; ++pass) {
    normalize(rels);

    // A one-letter relator kills its generator.
    auto single = std::find_if(rels.begin(), rels.end(), [](const Word& r) { return r.size() == 1; });
    if (single != rels.end()) {
      const int gen = std::abs(single->front());
      eliminate(gen, {}, static_cast<std::size_t>(single - rels.begin()));
      continue;
    }

    // A generator that occurs once in the whole presentation goes away with
    // its relator.
    std::map<int, int> total;
    for (const auto& r : rels) {
      for (const auto& [gen, count] : occurrences(r)) total[gen] += count;
    }
    bool changed = false;
    for (std::size_t k = 0; k < rels.size() && !changed; ++k) {
      for (const auto& [gen, count] : occurrences(rels[k])) {
        if (count == 1 && total[gen] == 1) {
          rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(k));
          alive[static_cast<std::size_t>(gen - 1)] = false;
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;

    // Otherwise solve the shortest possible relator for a generator it
    // contains once and substitute everywhere else.
    for (std::size_t k = 0; k < rels.size() && !changed; ++k) {
      for (const auto& [gen, count] : occurrences(rels[k])) {
        if (count != 1) continue;
        const Word value = solve_for(rels[k], gen);
        std::size_t longest = 0;
        for (std::size_t o = 0; o < rels.size(); ++o) {
          if (o != k) longest = std::max(longest, substitute(rels[o], gen, value).size());
        }
        if (longest > options.max_relator_length) continue;
        eliminate(gen, value, k);
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  normalize(rels);

  std::vector<int> renumber(static_cast<std::size_t>(pres.generators) + 1, 0);
  int next = 0;
  for (int gen = 1; gen <= pres.generators; ++gen) {
    if (alive[static_cast<std::size_t>(gen - 1)]) renumber[static_cast<std::size_t>(gen)] = ++next;
  }
  GroupPresentation out;
  out.generators = next;
  out.case_tag = pres.case_tag;
  for (auto r : rels) {
    for (int& x : r) x = x > 0 ? renumber[static_cast<std::size_t>(x)] : -renumber[static_cast<std::size_t>(-x)];
    out.relators.push_back(canonical_relator(r));
  }
  normalize(out.relators);
  return out;
}

}  // namespace gemkit
