// biercert: nonembeddability certificates for simplicial complexes.
//
// Exit codes: 0 success, 1 a requested boolean check came out false (or no
// obstruction was found), 2 input error, 3 resource-limit refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "biercert/certify.hpp"
#include "biercert/cochain.hpp"
#include "biercert/dual_join.hpp"
#include "biercert/errors.hpp"
#include "biercert/facet_file.hpp"
#include "biercert/report.hpp"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw bier::InputError("cannot write '" + out_path + "'");
    out << text;
}

std::string fvector_line(const bier::SimplicialComplex& k) {
    std::string line;
    for (std::int64_t f : bier::f_vector(k)) {
        if (!line.empty()) line += ' ';
        line += std::to_string(f);
    }
    return line + "; chi=" + std::to_string(bier::euler_characteristic(k));
}

int run_fvector(const std::string& path) {
    std::cout << fvector_line(bier::parse_facet_file(path)) << "\n";
    return 0;
}

int run_dual(const std::string& path, const std::string& out) {
    emit(bier::to_facet_string(bier::alexander_dual(bier::parse_facet_file(path))), out);
    return 0;
}

int run_bier(const std::string& path, const std::string& out, std::int64_t max_faces) {
    const bier::SimplicialComplex k = bier::parse_facet_file(path);
    const bier::SimplicialComplex dual = bier::alexander_dual(k);
    if (dual.kind() == bier::ComplexKind::Void)
        throw bier::InputError("the full simplex has no Bier sphere (its dual is void)");

    const bier::FVector f = bier::deleted_join_f_vector(k, dual);
    std::int64_t faces = 0, chi = 0;
    int sign = 1;
    for (std::int64_t fi : f) {
        faces += fi;
        chi += sign * fi;
        sign = -sign;
    }
    std::string line;
    for (std::int64_t fi : f) {
        if (!line.empty()) line += ' ';
        line += std::to_string(fi);
    }
    std::cout << line << "; chi=" << chi << "\n";
    if (faces > max_faces) {
        std::cerr << "refusing to materialise " << faces << " faces (cap " << max_faces
                  << "); counts are printed above\n";
        return kExitResource;
    }
    emit(bier::to_facet_string(bier::bier_sphere(k.n(), k).complex), out);
    return 0;
}

int run_homology(const std::string& path) {
    std::string line;
    for (std::int64_t b : bier::betti_numbers_z2(bier::parse_facet_file(path))) {
        if (!line.empty()) line += ' ';
        line += std::to_string(b);
    }
    std::cout << line << "\n";
    return 0;
}

int run_check(const std::string& path) {
    const bier::SimplicialComplex k = bier::parse_facet_file(path);
    const bier::Certificate cert = bier::nonembeddability_report(k);
    std::cout << "n = " << cert.n << ", kind = " << to_string(cert.kind);
    if (cert.dim) std::cout << ", dim = " << *cert.dim;
    std::cout << "\n";
    std::cout << "complementarity: " << (cert.complementarity ? "true" : "false");
    if (cert.complementarity_witness)
        std::cout << " (witness " << cert.complementarity_witness->to_string() << ": "
                  << (cert.witness_both_faces ? "both it and its complement are faces"
                                              : "neither it nor its complement is a face")
                  << ")";
    std::cout << "\n";
    std::cout << "self-dual: " << (cert.self_dual ? "true" : "false") << "\n";
    std::cout << "neighborliness: max k = " << cert.neighborliness << "\n";
    std::cout << "minimal nonfaces: " << cert.nonface_count << "\n";
    return cert.complementarity ? 0 : kExitFalse;
}

int run_report(const std::string& path, const std::string& out, int exact_chi_limit, int threads,
               bool timings) {
    bier::ReportOptions opts;
    opts.certify.exact_chi_limit = exact_chi_limit;
    opts.certify.threads = threads;
    opts.include_timings = timings;
    const bier::ReportDocument doc = bier::build_report(bier::parse_facet_file(path), opts);
    emit(bier::report_to_json(doc, timings), out);
    const bool obstruction = doc.certificate.index_lower && *doc.certificate.index_lower >= 1;
    return obstruction ? 0 : kExitFalse;
}

int run_gen(const std::string& kind, int size, const std::string& out) {
    bier::SimplicialComplex k;
    if (kind == "simplex-boundary")
        k = bier::boundary_of_simplex(size);
    else if (kind == "full-simplex")
        k = bier::full_simplex(size);
    else if (kind == "crosspolytope")
        k = bier::cross_polytope_boundary(size);
    else if (kind == "cycle")
        k = bier::cycle_complex(size);
    else if (kind == "rp2-6")
        k = bier::search_complementarity_surfaces().front();
    else
        throw bier::InputError("unknown generator '" + kind + "'");
    emit(bier::to_facet_string(k), out);
    return 0;
}

int run_prop32(const std::string& path) {
    const bier::SimplicialComplex k = bier::parse_facet_file(path);
    const bier::Prop32Result r = bier::prop32_equivalence(k, 1);
    std::cout << "induced 1-spheres checked: " << r.spheres_checked << "\n";
    std::cout << "equivalence holds: " << (r.holds ? "true" : "false") << "\n";
    if (r.first_violation)
        std::cout << "first violation on vertex set " << r.first_violation->to_string() << "\n";
    return r.holds ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonembeddability certificates for simplicial complexes"};
    app.require_subcommand(1);

    std::string path, out;
    std::int64_t max_faces = std::int64_t{1} << 20;
    int exact_chi_limit = 32;
    int threads = 0;
    bool timings = false;
    std::string gen_kind;
    int gen_size = 0;

    auto* fvec = app.add_subcommand("fvector", "print the f-vector and Euler characteristic");
    fvec->add_option("file", path, "facet file")->required();

    auto* dual = app.add_subcommand("dual", "write the Alexander dual as a facet file");
    dual->add_option("file", path, "facet file")->required();
    dual->add_option("-o,--output", out, "output path (stdout when absent)");

    auto* bierc = app.add_subcommand(
        "bier", "write the Bier-sphere facet file (prints its f-vector and chi first)");
    bierc->add_option("file", path, "facet file")->required();
    bierc->add_option("-o,--output", out, "output path (stdout when absent)");
    bierc->add_option("--max-faces", max_faces, "refuse to materialise more faces than this");

    auto* hom = app.add_subcommand("homology", "print the Z2 Betti numbers");
    hom->add_option("file", path, "facet file")->required();

    auto* check = app.add_subcommand(
        "check", "complementarity, neighborliness and self-duality summary with witnesses");
    check->add_option("file", path, "facet file")->required();

    auto* report = app.add_subcommand("report", "full certificate as canonical JSON");
    report->add_option("file", path, "facet file")->required();
    report->add_option("-o,--output", out, "output path (stdout when absent)");
    report->add_option("--exact-chi-limit", exact_chi_limit,
                       "exact coloring only up to this many Kneser vertices");
    report->add_option("--threads", threads,
                       "worker threads (0: BIERCERT_THREADS env var, else hardware)");
    report->add_flag("--timings", timings, "append per-stage timings (non-canonical field)");

    auto* gen = app.add_subcommand("gen", "emit a fixture facet file");
    gen->add_option("kind", gen_kind,
                    "one of: simplex-boundary, full-simplex, crosspolytope, cycle, rp2-6")
        ->required();
    gen->add_option("size", gen_size, "size parameter (not used by rp2-6)");
    gen->add_option("-o,--output", out, "output path (stdout when absent)");

    auto* prop32 = app.add_subcommand("prop32", "counting-cochain equivalence suite (m = 1)");
    prop32->add_option("file", path, "facet file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (fvec->parsed()) return run_fvector(path);
        if (dual->parsed()) return run_dual(path, out);
        if (bierc->parsed()) return run_bier(path, out, max_faces);
        if (hom->parsed()) return run_homology(path);
        if (check->parsed()) return run_check(path);
        if (report->parsed()) return run_report(path, out, exact_chi_limit, threads, timings);
        if (gen->parsed()) {
            if (gen_kind != "rp2-6" && gen_size < 1)
                throw bier::InputError("generator '" + gen_kind + "' needs a positive size");
            return run_gen(gen_kind, gen_size, out);
        }
        if (prop32->parsed()) return run_prop32(path);
    } catch (const bier::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const bier::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const bier::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
