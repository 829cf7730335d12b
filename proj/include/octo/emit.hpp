#pragma once

// Text, JSON and CSV renderings of the artifacts printed by octo-g2.

#include "octo/scalar.hpp"
#include "octo/verify.hpp"
#include "octo/weyl_modules.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace octo {

enum class Format
{
	text,
	json,
	csv,
};

std::optional<Format> parse_format(std::string const &s);

/// {"re": {"num": "..", "den": ".."}, "im": {...}} with decimal strings.
nlohmann::ordered_json to_json(Scalar const &s);
/// RFC 4180 field: quoted when it holds a comma, quote or line break.
std::string csv_field(std::string const &s);

std::string emit_multable(Format f);
std::string emit_roots(Format f);
std::string emit_chevalley(Format f, bool matrices);
std::string emit_structure(Format f);
std::string emit_action_table(Format f);
std::string emit_kernel(Format f);
std::string emit_irrep(IrrepReport const &r, Format f, bool weights);
std::string emit_verify(VerificationReport const &r, Format f);
std::string emit_conventions(Format f);

} // namespace octo
