// polystoch: command-line front end for the polystochastic-matrix library.
//
// Exit codes: 0 success (or predicate true), 1 predicate false, 2 usage
// error, 3 invalid or unreadable input data. Machine output goes to
// stdout, diagnostics to stderr.

#include "polystoch/bounds.hpp"
#include "polystoch/catalog.hpp"
#include "polystoch/errors.hpp"
#include "polystoch/products.hpp"
#include "polystoch/search.hpp"
#include "polystoch/serialize.hpp"
#include "polystoch/symmetry.hpp"
#include "polystoch/vertex_test.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace polystoch;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

MultiMatrix read_matrix_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ParseError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_matrix(text);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw ParseError("failed writing '" + path + "'");
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

const char* bool_word(bool v) {
    return v ? "true" : "false";
}

struct VerifyOptions {
    std::string file;
    std::string certificate_path;
    bool vertex = false;
    bool json = false;
};

int run_verify(const VerifyOptions& opt) {
    MultiMatrix a = read_matrix_file(opt.file);
    bool poly = is_polystochastic(a);
    bool vertex = false;
    std::optional<NonVertexCertificate> cert;
    if (opt.vertex && poly) {
        if (opt.certificate_path.empty()) {
            vertex = is_vertex(a);
        } else {
            cert = non_vertex_certificate(a);
            vertex = !cert.has_value();
        }
    }

    if (opt.json) {
        std::string out = "{\"polystochastic\":";
        out += bool_word(poly);
        if (opt.vertex) {
            out += ",\"vertex\":";
            out += bool_word(vertex);
        }
        out += "}";
        std::cout << out << "\n";
    } else {
        std::cout << "polystochastic: " << bool_word(poly) << "\n";
        if (opt.vertex)
            std::cout << "vertex: " << bool_word(vertex) << "\n";
    }

    if (!opt.certificate_path.empty()) {
        if (cert) {
            write_text_file(opt.certificate_path, serialize_certificate(*cert));
            std::cerr << "certificate written to " << opt.certificate_path << "\n";
        } else {
            std::cerr << "no certificate: "
                      << (poly ? "matrix is a vertex" : "matrix is not polystochastic") << "\n";
        }
    }
    bool predicate = opt.vertex ? vertex : poly;
    return predicate ? kExitTrue : kExitFalse;
}

struct ProductOptions {
    std::string lhs;
    std::string rhs;
    std::string out;
    bool kron = false;
    bool use_dot = false;
};

int run_product(const ProductOptions& opt) {
    MultiMatrix a = read_matrix_file(opt.lhs);
    MultiMatrix b = read_matrix_file(opt.rhs);
    MultiMatrix c = opt.kron ? kronecker(a, b) : dot(a, b);
    std::string doc = serialize_matrix(c);
    if (opt.out.empty())
        std::cout << doc << "\n";
    else
        write_text_file(opt.out, doc);
    return kExitTrue;
}

struct EnumerateOptions {
    int n = 0;
    int d = 0;
    int threads = 1;
    bool classes = false;
    std::string out_dir;
    bool json = false;
};

int run_enumerate(const EnumerateOptions& opt) {
    std::vector<MultiMatrix> vertices = enumerate_vertices(opt.n, opt.d, opt.threads);

    std::vector<EquivalenceClass> classes;
    std::vector<std::size_t> class_of(vertices.size());
    bool classified = opt.classes || !opt.out_dir.empty();
    if (classified) {
        classes = classify(vertices);
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (std::size_t member : classes[k].members)
                class_of[member] = k + 1;
    }

    if (opt.json) {
        std::string out = "{\"n\":" + std::to_string(opt.n) + ",\"d\":" + std::to_string(opt.d);
        out += ",\"count\":" + std::to_string(vertices.size());
        out += ",\"vertices\":[";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i)
                out += ',';
            out += serialize_matrix(vertices[i]);
        }
        out += "]";
        if (opt.classes) {
            out += ",\"classes\":[";
            for (std::size_t k = 0; k < classes.size(); ++k) {
                if (k)
                    out += ',';
                out += "{\"size\":" + std::to_string(classes[k].size);
                out += ",\"support_size\":" + std::to_string(support_size(classes[k].representative));
                out += ",\"representative\":" + serialize_matrix(classes[k].representative) + "}";
            }
            out += "]";
        }
        out += "}";
        std::cout << out << "\n";
    } else {
        for (const MultiMatrix& v : vertices)
            std::cout << serialize_matrix(v) << "\n";
        std::cout << "vertices: " << vertices.size() << "\n";
        if (opt.classes)
            for (std::size_t k = 0; k < classes.size(); ++k)
                std::cout << "class " << (k + 1) << ": size " << classes[k].size << "\n";
    }

    if (!opt.out_dir.empty()) {
        std::filesystem::create_directories(opt.out_dir);
        std::string index = "{\"n\":" + std::to_string(opt.n) + ",\"d\":" + std::to_string(opt.d);
        index += ",\"count\":" + std::to_string(vertices.size());
        index += ",\"vertices\":[";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "vertex_%05zu.json", i);
            write_text_file((std::filesystem::path(opt.out_dir) / name).string(),
                            serialize_matrix(vertices[i]));
            if (i)
                index += ',';
            index += "{\"file\":\"" + std::string(name) + "\"";
            index += ",\"class\":" + std::to_string(class_of[i]);
            index += ",\"canonical\":" + serialize_matrix(canonical_form(vertices[i])) + "}";
        }
        index += "],\"classes\":[";
        for (std::size_t k = 0; k < classes.size(); ++k) {
            if (k)
                index += ',';
            index += "{\"size\":" + std::to_string(classes[k].size);
            index += ",\"representative\":" + serialize_matrix(classes[k].representative) + "}";
        }
        index += "]}";
        write_text_file((std::filesystem::path(opt.out_dir) / "index.json").string(), index);
    }
    return kExitTrue;
}

struct SampleOptions {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    std::uint64_t count = 1;
    bool json = false;
};

int run_sample(const SampleOptions& opt) {
    std::vector<std::string> docs;
    for (std::uint64_t k = 0; k < opt.count; ++k)
        docs.push_back(serialize_matrix(sample_vertex(opt.n, opt.d, opt.seed + k)));
    if (opt.json) {
        std::string out = "{\"samples\":[";
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (i)
                out += ',';
            out += docs[i];
        }
        out += "]}";
        std::cout << out << "\n";
    } else {
        for (const std::string& doc : docs)
            std::cout << doc << "\n";
    }
    return kExitTrue;
}

struct SurveyOptions {
    int n = 0;
    int d = 0;
    std::uint64_t seeds = 0;
    std::uint64_t seed0 = 0;
    int threads = 1;
    bool json = false;
};

int run_survey(const SurveyOptions& opt) {
    SurveyReport report = sample_survey(opt.n, opt.d, opt.seeds, opt.seed0, opt.threads);
    if (opt.json) {
        std::cout << serialize_survey(report) << "\n";
        return kExitTrue;
    }
    std::cout << "classes: " << report.classes.size() << "\n";
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
        const SurveyClass& cls = report.classes[k];
        std::cout << "class " << (k + 1) << ": size " << cls.count << ", support "
                  << cls.support_size << ", catalog "
                  << (cls.matches_catalog ? *cls.matches_catalog : std::string("new candidate class"))
                  << "\n";
    }
    return kExitTrue;
}

int run_canon(const std::string& file) {
    MultiMatrix a = read_matrix_file(file);
    std::cout << serialize_matrix(canonical_form(a)) << "\n";
    return kExitTrue;
}

int run_equiv(const std::string& lhs, const std::string& rhs, bool json) {
    MultiMatrix a = read_matrix_file(lhs);
    MultiMatrix b = read_matrix_file(rhs);
    bool eq = (a.order() == b.order() && a.dim() == b.dim()) && are_equivalent(a, b);
    if (json)
        std::cout << "{\"equivalent\":" << bool_word(eq) << "}\n";
    else
        std::cout << "equivalent: " << bool_word(eq) << "\n";
    return eq ? kExitTrue : kExitFalse;
}

int run_bounds(int n, int d, bool json) {
    BoundReport report = bound_report(n, d);
    if (json) {
        std::cout << serialize_bound_report(report) << "\n";
        return kExitTrue;
    }
    std::cout << "support_bound: " << report.support_bound.str() << "\n";
    std::cout << "mcmullen_upper: " << report.mcmullen_upper.str() << "\n";
    if (report.log2_lower) {
        const Log2Lower& lb = *report.log2_lower;
        std::cout << "log2_lower: "
                  << (lb.exact ? lb.exact->str() : format_real(lb.value)) << " ["
                  << log2_lower_case_name(lb.kind) << "]\n";
    } else {
        std::cout << "log2_lower: n/a\n";
    }
    std::cout << "log2_upper_leading: " << format_real(report.log2_upper_leading) << "\n";
    for (const std::string& note : report.notes)
        std::cout << "note: " << note << "\n";
    return kExitTrue;
}

int run_catalog(const std::string& name, const std::string& out) {
    std::string doc = serialize_matrix(catalog(name));
    if (out.empty())
        std::cout << doc << "\n";
    else
        write_text_file(out, doc);
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertices of the polytope of polystochastic matrices: exact "
                 "verification, products, enumeration, sampling, and bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "polystoch 0.1.0");

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Check a matrix file for polystochasticity "
                                                    "and (optionally) vertexhood");
    verify_cmd->add_option("file", verify_opt.file, "matrix file ('-' for stdin)")->required();
    verify_cmd->add_flag("--vertex", verify_opt.vertex, "also run the vertex test");
    verify_cmd->add_option("--certificate", verify_opt.certificate_path,
                           "write a convex-decomposition certificate here when the matrix "
                           "is not a vertex");
    verify_cmd->add_flag("--json", verify_opt.json, "emit canonical JSON");

    ProductOptions product_opt;
    auto* product_cmd = app.add_subcommand("product", "Kronecker or dot product of two matrices");
    product_cmd->add_flag("--kron", product_opt.kron, "Kronecker product");
    product_cmd->add_flag("--dot", product_opt.use_dot, "dot product (contract last vs first axis)");
    product_cmd->add_option("lhs", product_opt.lhs, "left matrix file")->required();
    product_cmd->add_option("rhs", product_opt.rhs, "right matrix file")->required();
    product_cmd->add_option("-o,--output", product_opt.out, "output file (stdout when omitted)");

    EnumerateOptions enum_opt;
    auto* enum_cmd = app.add_subcommand("enumerate", "List every vertex of the polytope of "
                                                     "shape (n, d)");
    enum_cmd->add_option("-n", enum_opt.n, "order")->required();
    enum_cmd->add_option("-d", enum_opt.d, "dimension")->required();
    enum_cmd->add_flag("--classes", enum_opt.classes, "also partition into equivalence classes");
    enum_cmd->add_option("-o,--output", enum_opt.out_dir,
                         "directory for one matrix file per vertex plus index.json");
    enum_cmd->add_option("--threads", enum_opt.threads, "worker threads (output is identical "
                                                        "for any count)");
    enum_cmd->add_flag("--json", enum_opt.json, "emit canonical JSON");

    SampleOptions sample_opt;
    auto* sample_cmd = app.add_subcommand("sample", "Sample vertices by maximizing seeded "
                                                    "random objectives");
    sample_cmd->add_option("-n", sample_opt.n, "order")->required();
    sample_cmd->add_option("-d", sample_opt.d, "dimension")->required();
    sample_cmd->add_option("--seed", sample_opt.seed, "base seed")->required();
    sample_cmd->add_option("--count", sample_opt.count, "number of samples (seeds seed..seed+count-1)");
    sample_cmd->add_flag("--json", sample_opt.json, "emit canonical JSON");

    SurveyOptions survey_opt;
    auto* survey_cmd = app.add_subcommand("survey", "Sample vertices and report their "
                                                    "equivalence classes");
    survey_cmd->add_option("-n", survey_opt.n, "order")->required();
    survey_cmd->add_option("-d", survey_opt.d, "dimension")->required();
    survey_cmd->add_option("--seeds", survey_opt.seeds, "number of seeds")->required();
    survey_cmd->add_option("--seed0", survey_opt.seed0, "first seed")->required();
    survey_cmd->add_option("--threads", survey_opt.threads, "worker threads");
    survey_cmd->add_flag("--json", survey_opt.json, "emit canonical JSON");

    std::string canon_file = "-";
    auto* canon_cmd = app.add_subcommand("canon", "Canonical form of a matrix under the "
                                                  "equivalence group");
    canon_cmd->add_option("file", canon_file, "matrix file ('-' for stdin)");

    std::string equiv_lhs, equiv_rhs;
    bool equiv_json = false;
    auto* equiv_cmd = app.add_subcommand("equiv", "Test two matrices for equivalence");
    equiv_cmd->add_option("lhs", equiv_lhs, "left matrix file")->required();
    equiv_cmd->add_option("rhs", equiv_rhs, "right matrix file")->required();
    equiv_cmd->add_flag("--json", equiv_json, "emit canonical JSON");

    int bounds_n = 0, bounds_d = 0;
    bool bounds_json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "Vertex-count and support bounds for "
                                                    "shape (n, d)");
    bounds_cmd->add_option("-n", bounds_n, "order (>= 2)")->required();
    bounds_cmd->add_option("-d", bounds_d, "dimension (>= 1)")->required();
    bounds_cmd->add_flag("--json", bounds_json, "emit canonical JSON");

    std::string catalog_name, catalog_out;
    auto* catalog_cmd = app.add_subcommand("catalog", "Print a built-in reference matrix");
    catalog_cmd->add_option("name", catalog_name, "one of the catalog names")->required();
    catalog_cmd->add_option("-o,--output", catalog_out, "output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify_cmd)
            return run_verify(verify_opt);
        if (*product_cmd) {
            if (product_opt.kron == product_opt.use_dot) {
                std::cerr << "product: exactly one of --kron / --dot is required\n";
                return kExitUsage;
            }
            return run_product(product_opt);
        }
        if (*enum_cmd)
            return run_enumerate(enum_opt);
        if (*sample_cmd)
            return run_sample(sample_opt);
        if (*survey_cmd)
            return run_survey(survey_opt);
        if (*canon_cmd)
            return run_canon(canon_file);
        if (*equiv_cmd)
            return run_equiv(equiv_lhs, equiv_rhs, equiv_json);
        if (*bounds_cmd)
            return run_bounds(bounds_n, bounds_d, bounds_json);
        if (*catalog_cmd)
            return run_catalog(catalog_name, catalog_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitUsage;
}
