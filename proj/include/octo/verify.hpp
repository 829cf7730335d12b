#pragma once

// Invariant suites run by `octo-g2 verify`.

#include <string>
#include <vector>

namespace octo {

struct CheckResult
{
	std::string suite;
	std::string name;
	bool pass = false;
	std::string witness; // empty on success
};

struct VerificationReport
{
	std::string suite;
	std::vector<CheckResult> checks;

	bool passed() const;
};

/// gf8, scalar, linalg, octonion, derivations, chevalley, standard_rep, weyl_modules.
std::vector<std::string> const &suite_names();

/// One of suite_names() or "all". Throws std::invalid_argument otherwise.
/// A check that throws is recorded as failed with the exception message.
VerificationReport run_suite(std::string const &name);

} // namespace octo
