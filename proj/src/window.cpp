#include "imverma/window.hpp"

#include <fmt/format.h>

#include <charconv>
#include <sstream>

namespace imverma {

void TruncationWindow::validate() const
{
	if (L <= 0 || N <= 0 || H <= 0)
		throw DomainError(fmt::format("window must be positive, got {}", to_string()));
}

std::string TruncationWindow::to_string() const { return fmt::format("L={},N={},H={}", L, N, H); }

TruncationWindow parse_window(std::string const &text)
{
	TruncationWindow w;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		auto eq = item.find('=');
		if (eq == std::string::npos)
			throw DomainError(fmt::format("malformed window entry '{}'", item));
		std::string key = item.substr(0, eq), val = item.substr(eq + 1);
		int v = 0;
		auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
		if (ec != std::errc() || ptr != val.data() + val.size())
			throw DomainError(fmt::format("malformed window value '{}'", item));
		if (key == "L")
			w.L = v;
		else if (key == "N")
			w.N = v;
		else if (key == "H")
			w.H = v;
		else
			throw DomainError(fmt::format("unknown window key '{}'", key));
	}
	w.validate();
	return w;
}

} // namespace imverma
