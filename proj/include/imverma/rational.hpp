#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace imverma {

using Rational = mpq_class;

/// Base class for every error raised by the library on bad mathematical input.
class DomainError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

/// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Always "p/q", including integers ("3/1"), so values survive any round trip.
std::string to_string(Rational const &r);

/// Shorter form for human-facing labels: "3", "-1/2".
std::string to_short_string(Rational const &r);

inline bool is_integer(Rational const &r) { return r.get_den() == 1; }

} // namespace imverma
