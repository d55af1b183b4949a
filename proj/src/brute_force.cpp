#include <map>
#include <stdexcept>

#include "hring/enumerator.hpp"

namespace hring {

std::vector<Configuration> brute_force_reference(int p) {
  if (p < 1 || p > kBruteForceMaxPeriod) {
    throw std::invalid_argument("brute-force reference supports 1 <= p <= " +
                                std::to_string(kBruteForceMaxPeriod));
  }

  std::map<Encoding, Configuration> found;
  // Odometer over parent arrays; digit p stands for "no parent".
  std::vector<int> digit(p, 0);
  while (true) {
    std::vector<std::optional<Ring>> parent(p);
    for (Ring r = 0; r < p; ++r)
      if (digit[r] < p) parent[r] = digit[r];

    bool forest = true;
    try {
      Configuration probe(p, parent, {}, 0);
    } catch (const ConfigError&) {
      forest = false;
    }

    if (forest) {
      for (Ring omitted = 0; omitted < p; ++omitted) {
        for (unsigned mask = 0; mask < (1U << p); ++mask) {
          std::vector<Pole> poles;
          for (Ring r = 0; r < p; ++r) {
            if (mask & (1U << r)) poles.push_back({"w" + std::to_string(poles.size() + 1), r});
          }
          Configuration c(p, parent, std::move(poles), omitted);
          if (!validate(c).ok()) continue;
          Configuration canon = with_standard_pole_ids(canonical_form(c));
          found.emplace(encode(canon), std::move(canon));
        }
      }
    }

    int i = 0;
    while (i < p && ++digit[i] == p + 1) digit[i++] = 0;
    if (i == p) break;
  }

  std::vector<Configuration> out;
  out.reserve(found.size());
  for (auto& [key, c] : found) out.push_back(std::move(c));
  return out;
}

}  // namespace hring
