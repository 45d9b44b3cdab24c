// Command-line front end for the random stable matching library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rsm/error.hpp"
#include "rsm/io.hpp"
#include "rsm/random_stable.hpp"
#include "rsm/stable_lattice.hpp"

namespace {

using namespace rsm;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Side parse_side(const std::string& s) { return s == "W" ? Side::Worker : Side::Firm; }

void print_alignment(const SplitAlignment& a, const StableSet& ss) {
    std::cout << "terms: " << a.size() << "\n";
    for (std::size_t l = 0; l < a.size(); ++l) {
        std::cout << to_string(a.gamma[l]) << "  " << matching_label(ss.require_index(a.mx[l])) << "  "
                  << matching_label(ss.require_index(a.my[l])) << "\n";
    }
}

void print_sums(const char* name, const std::vector<Rational>& rows, const std::vector<Rational>& cols) {
    std::cout << name << " rows:";
    for (const auto& r : rows) std::cout << ' ' << to_string(r);
    std::cout << "\n" << name << " cols:";
    for (const auto& c : cols) std::cout << ' ' << to_string(c);
    std::cout << "\n";
}

int check_axioms(const MarketDocument& doc) {
    bool ok = true;
    for (Side side : {Side::Firm, Side::Worker}) {
        const auto& names = doc.names(side);
        const auto& other = doc.names(opposite(side));
        for (int i = 0; i < static_cast<int>(names.size()); ++i) {
            const auto& pref = doc.market.pref(AgentId{side, i});
            if (auto w = substitutability_violation(pref)) {
                ok = false;
                std::cout << names[i] << ": not substitutable, S=" << format_set(w->offered, other)
                          << " S'=" << format_set(w->subset, other) << " b=" << other[w->agent] << "\n";
            }
            if (auto w = lad_violation(pref)) {
                ok = false;
                std::cout << names[i] << ": violates LAD, S=" << format_set(w->offered, other)
                          << " S'=" << format_set(w->subset, other) << "\n";
            }
        }
    }
    std::cout << (ok ? "ok: every preference is substitutable and satisfies LAD\n" : "axiom check failed\n");
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice operations on random stable matchings"};
    app.require_subcommand(1);

    std::string market_path, x_path, y_path, dot_path, side = "F", method = "split";

    auto* check = app.add_subcommand("check", "Check substitutability and LAD for every preference");
    check->add_option("market", market_path)->required();

    auto* enumerate = app.add_subcommand("enumerate", "List every stable matching");
    enumerate->add_option("market", market_path)->required();

    auto* lattice = app.add_subcommand("lattice", "Write the >=_F Hasse diagram as DOT");
    lattice->add_option("market", market_path)->required();
    lattice->add_option("--dot", dot_path, "Output file, '-' for stdout")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Decreasing representation of a lottery");
    decompose_cmd->add_option("market", market_path)->required();
    decompose_cmd->add_option("lottery", x_path)->required();

    auto add_pair = [&](CLI::App* cmd) {
        cmd->add_option("market", market_path)->required();
        cmd->add_option("x", x_path)->required();
        cmd->add_option("y", y_path)->required();
    };
    auto* split_cmd = app.add_subcommand("split", "Align two lotteries on common weights");
    add_pair(split_cmd);
    auto* dominates_cmd = app.add_subcommand("dominates", "Compare two lotteries for one side");
    add_pair(dominates_cmd);
    dominates_cmd->add_option("--side", side)->check(CLI::IsMember({"F", "W"}));
    auto* join_cmd = app.add_subcommand("join", "Least upper bound of two lotteries");
    auto* meet_cmd = app.add_subcommand("meet", "Greatest lower bound of two lotteries");
    for (auto* cmd : {join_cmd, meet_cmd}) {
        add_pair(cmd);
        cmd->add_option("--side", side)->check(CLI::IsMember({"F", "W"}));
        cmd->add_option("--method", method)->check(CLI::IsMember({"split", "lcm"}));
    }
    auto* rht_cmd = app.add_subcommand("rht", "Row and column sums of two lotteries");
    add_pair(rht_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        const MarketDocument doc = parse_market(read_file(market_path));
        if (check->parsed()) return check_axioms(doc);

        const StableSet ss = enumerate_stable(doc.market);
        auto load = [&](const std::string& path) { return parse_lottery(read_file(path), doc); };

        if (enumerate->parsed()) {
            std::cout << format_stable_table(ss, doc);
        } else if (lattice->parsed()) {
            const std::string dot = hasse_dot(ss);
            if (dot_path == "-") {
                std::cout << dot;
            } else {
                std::ofstream out(dot_path);
                if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + dot_path);
                out << dot;
            }
        } else if (decompose_cmd->parsed()) {
            std::cout << format_lottery(decompose(load(x_path), ss), ss) << "\n";
        } else if (split_cmd->parsed()) {
            print_alignment(split(decompose(load(x_path), ss), decompose(load(y_path), ss), ss), ss);
        } else if (dominates_cmd->parsed()) {
            std::cout << to_string(dominates(load(x_path), load(y_path), parse_side(side), ss)) << "\n";
        } else if (join_cmd->parsed() || meet_cmd->parsed()) {
            const auto how = method == "lcm" ? CombineMethod::Lcm : CombineMethod::Split;
            const Lottery x = load(x_path), y = load(y_path);
            const Lottery r = join_cmd->parsed() ? join_random(x, y, parse_side(side), ss, how)
                                                 : meet_random(x, y, parse_side(side), ss, how);
            std::cout << format_lottery(r, ss) << "\n";
        } else if (rht_cmd->parsed()) {
            const auto report = random_rht_check(load(x_path), load(y_path));
            print_sums("x", report.x_rows, report.x_cols);
            print_sums("y", report.y_rows, report.y_cols);
            std::cout << (report.holds ? "equal" : "different") << "\n";
            return report.holds ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error[" << error_category(e.kind()) << "]: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
