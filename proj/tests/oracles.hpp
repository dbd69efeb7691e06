#pragma once

// Independent reference computations used to freeze expected values in tests.
// Nothing here calls into the library code paths it is used to check.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

/// Positive roots by the root-string algorithm: beta + alpha_i is a root iff
/// q - <beta, alpha_i^vee> > 0, where q is the length of the alpha_i-string below beta.
inline std::set<std::vector<int>> positive_roots(std::vector<std::vector<int>> const &a)
{
	int n = static_cast<int>(a.size());
	std::set<std::vector<int>> roots;
	std::vector<std::vector<int>> layer;
	for (int i = 0; i < n; ++i)
	{
		std::vector<int> r(n, 0);
		r[i] = 1;
		roots.insert(r);
		layer.push_back(r);
	}
	while (!layer.empty())
	{
		std::vector<std::vector<int>> next;
		for (auto const &beta : layer)
			for (int i = 0; i < n; ++i)
			{
				int q = 0;
				auto down = beta;
				while (true)
				{
					down[i] -= 1;
					if (!roots.count(down))
						break;
					++q;
				}
				int pairing = 0;
				for (int j = 0; j < n; ++j)
					pairing += beta[j] * a[i][j];
				if (q - pairing > 0)
				{
					auto up = beta;
					up[i] += 1;
					if (roots.insert(up).second)
						next.push_back(up);
				}
			}
		layer = std::move(next);
	}
	return roots;
}

/// Coefficients of prod_{l>=1} (1 - q^l)^{-colors} up to q^kmax, by repeated series division.
inline std::vector<std::int64_t> colored_partitions(int colors, int kmax)
{
	std::vector<std::int64_t> series(kmax + 1, 0);
	series[0] = 1;
	for (int c = 0; c < colors; ++c)
		for (int l = 1; l <= kmax; ++l)
			// multiply by 1/(1 - q^l): s[k] += s[k - l], ascending k
			for (int k = l; k <= kmax; ++k)
				series[k] += series[k - l];
	return series;
}

} // namespace oracle
