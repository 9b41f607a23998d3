#include "sparselp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "sparselp/error.hpp"
#include "sparselp/io.hpp"
#include "sparselp/matrix.hpp"

namespace sparselp {

int exit_code_for(const std::exception& e)
{
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const IoError*>(&e))
        return exit_parse;
    if (dynamic_cast<const SemanticError*>(&e))
        return exit_semantic;
    if (dynamic_cast<const ResourceLimitError*>(&e))
        return exit_resource;
    return 1;
}

namespace {

int guarded(std::ostream& err, const std::function<void()>& body)
{
    try {
        body();
        return exit_ok;
    } catch (const ParseError& e) {
        err << "error: ";
        if (e.line() > 0) {
            err << "line " << e.line();
            if (e.column() > 0)
                err << ":" << e.column();
            err << ": ";
        }
        err << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

NormalProgram load_program(const std::string& path, std::ostream& err)
{
    std::vector<ParseWarning> warnings;
    NormalProgram p = parse_program(read_file(path), &warnings);
    for (const auto& w : warnings)
        err << "warning: line " << w.line << ":" << w.column << ": " << w.message << "\n";
    return p;
}

std::vector<std::string> sorted_names(const AtomSet& set, const AtomTable& atoms)
{
    std::vector<std::string> names;
    names.reserve(set.size());
    for (AtomId a : set)
        names.push_back(atoms.name(a));
    std::sort(names.begin(), names.end());
    return names;
}

std::string join(const std::vector<std::string>& names)
{
    std::string line;
    for (const auto& name : names) {
        if (!line.empty())
            line += ' ';
        line += name;
    }
    return line;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw IoError("failed writing '" + path + "'");
}

std::string profile_id(const GenProfile& profile)
{
    std::ostringstream os;
    os << to_string(profile.kind) << "-n" << profile.n << "-m" << profile.m << "-k" << profile.k << "-s"
       << profile.seed;
    return os.str();
}

void print_table(const std::vector<BenchRecord>& records, std::ostream& out)
{
    out << std::left << std::setw(28) << "program" << std::right << std::setw(8) << "n" << std::setw(9) << "m"
        << std::setw(9) << "n'" << std::setw(4) << "k" << std::setw(10) << "sparsity" << std::setw(10) << "backend"
        << std::setw(7) << "trials" << std::setw(13) << "mean_s" << std::setw(13) << "encode_s" << std::setw(8)
        << "models" << "\n";
    for (const auto& r : records) {
        out << std::left << std::setw(28) << r.program_id << std::right << std::setw(8) << r.n << std::setw(9) << r.m
            << std::setw(9) << r.n_prime << std::setw(4) << r.k << std::setw(10) << std::fixed
            << std::setprecision(4) << r.sparsity << std::setw(10) << to_string(r.backend);
        if (r.skipped) {
            out << "  " << *r.skipped << "\n";
            continue;
        }
        out << std::setw(7) << r.trials << std::setw(13) << std::scientific << std::setprecision(4)
            << r.mean_seconds << std::setw(13) << r.encode_seconds << std::setw(8) << r.model_count << "\n";
        out << std::defaultfloat;
    }
    out << std::defaultfloat;
}

} // namespace

int cmd_solve(const std::string& path, Backend backend, const SolverOptions& options, bool json, std::ostream& out,
              std::ostream& err)
{
    return guarded(err, [&] {
        const DefiniteProgram p = DefiniteProgram::from_normal(load_program(path, err));
        LeastModelSolver solver(p, backend, options);
        const FixpointTrace trace = solver.run();
        const auto names = sorted_names(solver.model(trace), p.atoms());
        const auto report = sparsity(solver.standardized());
        if (json) {
            nlohmann::ordered_json j;
            j["model"] = names;
            j["iterations"] = trace.iterations;
            j["n_prime"] = solver.standardized().atoms().size();
            j["sparsity"] = report.body_based;
            out << j.dump() << "\n";
            return;
        }
        out << join(names) << "\n";
        out << "iterations: " << trace.iterations << "\n";
        out << "n': " << solver.standardized().atoms().size() << "\n";
        out << "sparsity: " << report.body_based << "\n";
    });
}

int cmd_stable(const std::string& path, Backend backend, const SolverOptions& options, bool json, std::ostream& out,
               std::ostream& err)
{
    return guarded(err, [&] {
        const NormalProgram p = load_program(path, err);
        StableModelSolver solver(p, backend, options);
        const ModelSet models = solver.models(solver.run());
        std::vector<std::vector<std::string>> lines;
        for (const auto& model : models)
            lines.push_back(sorted_names(model, p.atoms()));
        std::sort(lines.begin(), lines.end());
        if (json) {
            nlohmann::ordered_json j;
            j["models"] = lines;
            j["count"] = lines.size();
            out << j.dump() << "\n";
            return;
        }
        if (lines.empty())
            out << "no stable models\n";
        for (const auto& line : lines)
            out << join(line) << "\n";
    });
}

int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const NormalProgram p = request.file ? load_program(*request.file, err) : generate(request.profile);
        const std::string id = request.file ? *request.file : profile_id(request.profile);
        std::vector<BenchRecord> records;
        for (Backend backend : request.backends) {
            records.push_back(bench_program(p, id, backend, request.options));
            if (!request.table)
                out << to_json_line(records.back()) << "\n" << std::flush;
        }
        if (request.table)
            print_table(records, out);
    });
}

int cmd_gen(const GenProfile& profile, const std::string& output, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const NormalProgram p = generate(profile);
        const std::string text = profile.header_comment() + "\n" + serialize_program(p);
        if (output.empty()) {
            out << text;
            return;
        }
        write_text(output, text);
        out << "n: " << p.atoms().size() << "\nm: " << p.rules().size() << "\n";
    });
}

int cmd_ground(const std::string& edge_path, const std::string& output, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const DefiniteProgram p = ground_transitive_closure(load_edge_list(read_file(edge_path)));
        const std::size_t n = p.atoms().size();
        const std::size_t m = p.rules().size();
        if (output.empty()) {
            out << "% n=" << n << " m=" << m << "\n" << serialize_program(p);
            return;
        }
        write_text(output, serialize_program(p));
        out << "n: " << n << "\nm: " << m << "\n";
    });
}

int cmd_stats(const std::string& path, const std::string& matrix_output, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const NormalProgram p = load_program(path, err);
        const ProgramStats stats = program_stats(p);
        if (!matrix_output.empty()) {
            const ProgramMatrix pm = p.is_definite()
                                         ? encode_program_matrix(standardize(DefiniteProgram::from_normal(p)).first)
                                         : encode_normal_matrix(prepare_normal(p));
            std::ostringstream mm;
            write_matrix_market(pm.matrix, mm);
            write_text(matrix_output, mm.str());
        }
        nlohmann::ordered_json j;
        j["n"] = stats.n;
        j["m"] = stats.m;
        j["n_prime"] = stats.n_prime;
        j["k"] = stats.k;
        j["sparsity"] = stats.sparsity.body_based;
        j["sparsity_nnz"] = stats.sparsity.nnz_based;
        j["free_negations"] = stats.free_negations;
        out << j.dump() << "\n";
    });
}

} // namespace sparselp
