#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"

using namespace heartglue::cli;

namespace {

int emit(const std::string& out, const std::string& path) {
  if (path.empty()) {
    std::cout << out;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: " << path << ":0: cannot write output\n";
    return 2;
  }
  f << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heartglue: derived categories of path algebras, glued hearts and Yoneda calculus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "heartglue 0.3.0");

  const std::map<std::string, std::string> about{
      {"ext-table", "dims of Hom(E_i, E_j[n]) over a shift window"},
      {"check-exceptional", "test an object list for being a (strong) exceptional sequence"},
      {"glue-hearts", "glue the point hearts of an exceptional sequence and list the heart generators"},
      {"dim-formula", "compare the glued heart dimension with max(dim1, dim2, rdim + 1) at every level"},
      {"yoneda-oracle", "check Yoneda extensions against derived Hom in degrees 1..3"},
      {"bondal-check", "endomorphism algebra, quiver presentation and the functor Hom(E, -)"},
      {"remark-counterexamples", "the two classes that do not factor through the heart's [1]-shift"}};
  Job job;
  std::string format = "text";
  std::string out_path;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, about.at(name));
    if (name == "remark-counterexamples")
      sub->add_option("algebra", job.algebra, "ignored; the command loads its own algebras");
    else
      sub->add_option("algebra", job.algebra, "algebra description file or corpus name")->required();
    if (name != "remark-counterexamples" && name != "yoneda-oracle")
      sub->add_option("--objects", job.objects, "object list file (default: the projectives P_1..P_n)");
    if (name == "yoneda-oracle")
      sub->add_option("--objects", job.objects, "module list file (default: all S_i and P_i)");
    sub->add_option("--window", job.window, "shift window half-width")->check(CLI::Range(1, 64));
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write the report to this file");
    if (name == "check-exceptional") sub->add_flag("--weak", job.weak, "skip the strongness test");
    sub->callback([&job, name] { job.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Format fmt = format == "json" ? Format::Json : Format::Text;
  try {
    Report r = run_job(job);
    int w = emit(render(r, fmt), out_path);
    return w != 0 ? w : r.status;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (fmt == Format::Json) {
      json diag{{"error", {{"file", e.file()}, {"line", e.line()}, {"message", e.message()}}}};
      emit(diag.dump(2) + "\n", out_path);
    }
    return 2;
  }
}
