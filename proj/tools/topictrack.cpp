// topictrack: build, classify and draw topic evolution trees from a topic
// profile CSV and a TES matrix CSV.

#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "topictrack/builder.hpp"
#include "topictrack/ingest.hpp"
#include "topictrack/layout.hpp"
#include "topictrack/render.hpp"
#include "topictrack/states.hpp"

namespace fs = std::filesystem;
using namespace topictrack;

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2, kUsage = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return buf.str();
}

/// Writes every file next to its destination first and renames only once all
/// of them were written, so a failure leaves no partial output behind.
void write_all(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> temps;
  auto cleanup = [&temps] {
    std::error_code ignored;
    for (const auto& t : temps) fs::remove(t, ignored);
  };
  for (const auto& [path, content] : files) {
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      cleanup();
      throw IoError("cannot write '" + path.string() + "'");
    }
    temps.push_back(tmp);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      throw IoError("error while writing '" + path.string() + "'");
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    std::error_code ec;
    fs::rename(temps[i], files[i].first, ec);
    if (ec) {
      cleanup();
      throw IoError("cannot move output into '" + files[i].first.string() + "': " + ec.message());
    }
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw IoError("cannot write to standard output");
    return;
  }
  write_all({{fs::path(out_path), content}});
}

struct BuildArgs {
  std::string profile_path;
  std::string tes_path;
  EvolutionParams params;
  std::string threshold_mode = "inclusive";
  bool lenient = false;
};

struct DrawArgs {
  bool show_root = false;
  double width = 1000.0;
  double height = 600.0;
};

void add_build_options(CLI::App& cmd, BuildArgs& args) {
  cmd.add_option("--profile", args.profile_path, "Topic profile CSV (id,index,label,weight,year,words)")
      ->required();
  cmd.add_option("--tes", args.tes_path, "N x N TES matrix CSV in profile order")->required();
  cmd.add_option("--min-tes", args.params.min_tes, "Minimum TES for a parent candidate")
      ->default_val(0.2)
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--min-reborn", args.params.min_reborn, "Years of silence before a topic counts as reborn")
      ->default_val(2)
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--min-dead", args.params.min_dead, "Trailing childless years before a topic counts as dead")
      ->default_val(1)
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--threshold-mode", args.threshold_mode, "Compare TES against min-tes with >= or >")
      ->default_val("inclusive")
      ->check(CLI::IsMember({"inclusive", "exclusive"}));
  cmd.add_flag("--lenient", args.lenient, "Coerce contemporary/diagonal matrix violations with warnings");
}

void add_draw_options(CLI::App& cmd, DrawArgs& args) {
  cmd.add_flag("--show-root", args.show_root, "Draw the dummy root and its edges");
  cmd.add_option("--width", args.width, "Canvas width")->default_val(1000.0)->check(CLI::Range(200.0, 100000.0));
  cmd.add_option("--height", args.height, "Canvas height")->default_val(600.0)->check(CLI::Range(150.0, 100000.0));
}

Tet build_from_files(BuildArgs& args) {
  args.params.threshold_mode = *parse_threshold_mode(args.threshold_mode);
  const std::string profile_csv = read_file(args.profile_path);
  const std::string tes_csv = read_file(args.tes_path);

  auto profile = parse_profile(profile_csv);
  std::cerr << profile.report.format();
  auto matrix = parse_tes(tes_csv, profile.value, args.lenient);
  std::cerr << matrix.report.format();
  return classify_all(build_tet(profile.value, matrix.value, args.params));
}

LayoutOptions layout_options(const DrawArgs& args) {
  LayoutOptions options;
  options.width = args.width;
  options.height = args.height;
  options.show_root = args.show_root;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic evolution tree builder and renderer"};
  app.require_subcommand(1);

  BuildArgs build_args;
  std::string build_out = "-";
  CLI::App* build = app.add_subcommand("build", "Build and classify a TET, write it as JSON");
  add_build_options(*build, build_args);
  build->add_option("--out", build_out, "Output path, '-' for stdout")->default_val("-");

  std::string tet_path;
  std::string format = "svg";
  std::string render_out = "-";
  DrawArgs render_args;
  CLI::App* render = app.add_subcommand("render", "Render a TET JSON document as SVG or DOT");
  render->add_option("--tet", tet_path, "TET JSON produced by 'build'")->required();
  render->add_option("--format", format, "svg or dot")->default_val("svg")->check(CLI::IsMember({"svg", "dot"}));
  render->add_option("--out", render_out, "Output path, '-' for stdout")->default_val("-");
  add_draw_options(*render, render_args);

  BuildArgs run_args;
  DrawArgs run_draw;
  std::string out_dir;
  CLI::App* run = app.add_subcommand("run", "Build and render in one go: tet.json, tet.svg, tet.dot");
  add_build_options(*run, run_args);
  add_draw_options(*run, run_draw);
  run->add_option("--out-dir", out_dir, "Directory receiving the three outputs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kUsage;
  }

  try {
    if (build->parsed()) {
      emit(build_out, to_json(build_from_files(build_args)));
    } else if (render->parsed()) {
      const Tet tet = from_json(read_file(tet_path));
      const LayoutOptions options = layout_options(render_args);
      if (format == "svg")
        emit(render_out, to_svg(tet, compute_layout(tet, options)));
      else
        emit(render_out, to_dot(tet, render_args.show_root));
    } else if (run->parsed()) {
      const Tet tet = build_from_files(run_args);
      const LayoutOptions options = layout_options(run_draw);
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec || !fs::is_directory(out_dir)) throw IoError("cannot use output directory '" + out_dir + "'");
      const fs::path dir(out_dir);
      write_all({{dir / "tet.json", to_json(tet)},
                 {dir / "tet.svg", to_svg(tet, compute_layout(tet, options))},
                 {dir / "tet.dot", to_dot(tet, run_draw.show_root)}});
    }
  } catch (const ValidationError& e) {
    std::cerr << e.report().format();
    return kValidation;
  } catch (const TetFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}
