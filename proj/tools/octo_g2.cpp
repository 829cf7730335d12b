#include "octo/emit.hpp"
#include "octo/verify.hpp"
#include "octo/weyl_modules.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace {

constexpr int kUsageError = 2;

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact construction of g2 from the octonions over F8"};
	app.name("octo-g2");
	app.require_subcommand(1);

	std::string format = "text";
	std::string output;
	app.add_option("--format", format, "Output format")
	    ->check(CLI::IsMember({"text", "json", "csv"}));
	app.add_option("--output", output, "Write to FILE instead of stdout");

	auto add = [&](char const *name, char const *help) {
		auto *sub = app.add_subcommand(name, help);
		sub->fallthrough();
		return sub;
	};

	add("multable", "Signed multiplication table of the basis e^x");
	add("roots", "The twelve roots in (H_beta, H_gamma) coordinates");
	bool matrices = false;
	add("chevalley", "The Chevalley basis")->add_flag("--matrices", matrices, "Print 8x8 matrices");
	add("structure", "Bracket table of the Chevalley basis (196 rows)");
	add("action-table", "E_rho acting on the weight vectors of V");
	add("kernel", "The Delta orbit spanning ker D");
	add("conventions", "Frozen conventions and basis orders");

	int a = 0, b = 0, max_degree = octo::kDefaultMaxDegree;
	bool weights = false;
	auto *irrep = add("irrep", "Generate Gamma_{a,b} from its highest weight vector");
	irrep->add_option("a", a)->required()->check(CLI::NonNegativeNumber);
	irrep->add_option("b", b)->required()->check(CLI::NonNegativeNumber);
	irrep->add_flag("--weights", weights, "Print weight multiplicities");
	irrep->add_option("--max-degree", max_degree, "Bound on a + 2b")->check(CLI::PositiveNumber);

	std::string suite = "all";
	add("verify", "Run invariant suites")
	    ->add_option("--suite", suite, "Suite name or 'all'");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		if (code == 0)
			return 0;
		std::cerr << app.help();
		return kUsageError;
	}

	octo::Format fmt = *octo::parse_format(format);
	std::string command = app.get_subcommands().front()->get_name();
	std::string text;
	int status = 0;
	try
	{
		if (command == "multable")
			text = octo::emit_multable(fmt);
		else if (command == "roots")
			text = octo::emit_roots(fmt);
		else if (command == "chevalley")
			text = octo::emit_chevalley(fmt, matrices);
		else if (command == "structure")
			text = octo::emit_structure(fmt);
		else if (command == "action-table")
			text = octo::emit_action_table(fmt);
		else if (command == "kernel")
			text = octo::emit_kernel(fmt);
		else if (command == "conventions")
			text = octo::emit_conventions(fmt);
		else if (command == "irrep")
		{
			octo::IrrepReport r;
			try
			{
				r = octo::generate_irrep(a, b, max_degree, weights);
			}
			catch (std::invalid_argument const &e)
			{
				std::cerr << "octo-g2: " << e.what() << "\n";
				return kUsageError;
			}
			text = octo::emit_irrep(r, fmt, weights);
			if (static_cast<long>(r.dim) != r.weyl || !r.in_image)
				status = 1;
		}
		else if (command == "verify")
		{
			if (suite != "all" && std::find(octo::suite_names().begin(), octo::suite_names().end(),
			                                suite) == octo::suite_names().end())
			{
				std::cerr << "octo-g2: unknown suite '" << suite << "'\n";
				return kUsageError;
			}
			octo::VerificationReport r = octo::run_suite(suite);
			text = octo::emit_verify(r, fmt);
			if (!r.passed())
				status = 1;
		}
	}
	catch (std::exception const &e)
	{
		std::cerr << "octo-g2: " << e.what() << "\n";
		return 1;
	}

	if (output.empty())
		std::cout << text;
	else
	{
		std::ofstream out(output, std::ios::binary);
		if (!(out << text))
		{
			std::cerr << "octo-g2: cannot write " << output << "\n";
			return 1;
		}
	}
	return status;
}
