#pragma once

#include "imverma/rational.hpp"

#include <string>

namespace imverma {

/// Finite slice on which every computation is exact.
///
/// L caps PBW monomial length, N caps |loop degree| per factor, H caps the
/// finite-root height of a weight offset.
struct TruncationWindow
{
	int L = 8;
	int N = 6;
	int H = 4;

	/// Throws DomainError unless all three caps are positive.
	void validate() const;
	std::string to_string() const;
	friend bool operator==(TruncationWindow const &, TruncationWindow const &) = default;
};

/// Parses "L=8,N=6,H=4"; missing keys keep their defaults.
TruncationWindow parse_window(std::string const &text);

} // namespace imverma
