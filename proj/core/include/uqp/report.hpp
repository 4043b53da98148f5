#pragma once

#include <string>
#include <vector>

namespace uqp {

// Outcome of one named identity check.
struct CheckResult {
	std::string id;
	bool pass = false;
	std::string detail; // witness / first failing order on failure
};

inline CheckResult check_pass(std::string id)
{
	return {std::move(id), true, ""};
}

inline CheckResult check_fail(std::string id, std::string detail)
{
	return {std::move(id), false, std::move(detail)};
}

inline bool all_pass(const std::vector<CheckResult>& rs)
{
	for (const CheckResult& r : rs)
		if (!r.pass) return false;
	return true;
}

} // namespace uqp
