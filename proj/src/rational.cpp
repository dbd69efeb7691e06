#include "imverma/rational.hpp"

#include <cctype>

namespace imverma {

namespace {

bool valid_integer(std::string_view s)
{
	if (s.empty())
		return false;
	std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
	if (i == s.size())
		return false;
	for (; i < s.size(); ++i)
		if (!std::isdigit(static_cast<unsigned char>(s[i])))
			return false;
	return true;
}

std::string strip(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	std::string out(s);
	if (!out.empty() && out[0] == '+')
		out.erase(0, 1);
	return out;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	auto s = strip(text);
	auto slash = s.find('/');
	auto num = s.substr(0, slash);
	auto den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
	if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
		throw DomainError("malformed rational '" + std::string(text) + "'");
	mpz_class n(num, 10), d(den, 10);
	if (d == 0)
		throw DomainError("zero denominator in '" + std::string(text) + "'");
	Rational r(n, d);
	r.canonicalize();
	return r;
}

std::string to_string(Rational const &r)
{
	return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short_string(Rational const &r)
{
	if (r.get_den() == 1)
		return r.get_num().get_str();
	return to_string(r);
}

} // namespace imverma
