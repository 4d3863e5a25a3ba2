// Command-line front door: compile generated sentences/schemes to files,
// model-check formulas on finite structures, solve and check tilings,
// synthesize/extract/validate frames, and run the verification suites.
//
// Exit codes: 0 success (or "true"/solution found), 1 semantic failure
// ("false", no solution, violations, invalid frame), 2 usage or parse error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "affine/defgen.hpp"
#include "affine/eval.hpp"
#include "affine/frames.hpp"
#include "affine/io.hpp"
#include "affine/verify.hpp"

using namespace affine;

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    io::write_file_atomic(out, text);
}

tiles::TileSet load_tiles(const std::string& path) {
  if (path.empty())
    throw std::runtime_error("this subcommand needs --tiles");
  return io::tiles_from_text(io::read_file(path));
}

// "MxK" or "M,K"
std::pair<int, int> parse_torus(const std::string& s) {
  auto sep = s.find_first_of("x,");
  if (sep == std::string::npos)
    throw std::runtime_error("--torus expects MxK, e.g. 3x2");
  int m = std::stoi(s.substr(0, sep)), k = std::stoi(s.substr(sep + 1));
  if (m < 1 || k < 1) throw std::runtime_error("--torus sizes must be >= 1");
  return {m, k};
}

int report_outcome(const verify::Report& r) {
  for (const auto& f : r.failures) std::cerr << "FAIL " << f << "\n";
  std::cout << r.cases << " cases, " << r.failures.size() << " failures\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine geometry / tiling workbench"};
  app.require_subcommand(1);

  std::string tiles_path, structure_path, formula_path, frame_path,
      labelling_path, torus_size, out_path;
  int max_bound = 3, dim = 2;
  std::size_t tile_pos = 0;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--tiles", tiles_path, "tile-set file");
    c->add_option("-o", out_path, "output file (default: stdout)");
  };

  auto* compile = app.add_subcommand("compile", "emit a generated sentence or scheme");
  std::string what;
  compile
      ->add_option("what", what, "construct to compile")
      ->required()
      ->check(CLI::IsMember({"tiling", "recurrent", "frame-inf", "frame-fin",
                             "reduction-grid", "reduction-torus", "omega",
                             "finiteness", "scheme-grid", "scheme-torus",
                             "scheme-recurrence"}));
  add_common(compile);
  compile->add_option("--dim", dim, "dimension for finiteness (default 2)");
  compile->add_option("--tile", tile_pos,
                      "designated tile position for recurrent (default 0)");

  auto* mc = app.add_subcommand("mc", "evaluate a formula file on a structure file");
  mc->add_option("--structure", structure_path)->required();
  mc->add_option("--formula", formula_path)->required();

  auto* tiles_cmd = app.add_subcommand("tiles", "tiling solver and checker");
  tiles_cmd->require_subcommand(1);
  auto* solve = tiles_cmd->add_subcommand("solve", "smallest torus the set tiles");
  add_common(solve);
  solve->add_option("--max", max_bound, "size bound on both torus dimensions");
  auto* check = tiles_cmd->add_subcommand("check", "validate a torus labelling");
  add_common(check);
  check->add_option("--labelling", labelling_path)->required();
  check->add_option("--torus", torus_size, "torus size MxK")->required();

  auto* frame = app.add_subcommand("frame", "finite Cartesian frame operations");
  frame->require_subcommand(1);
  auto* synth = frame->add_subcommand("synth", "canonical frame for a labelling");
  add_common(synth);
  synth->add_option("--labelling", labelling_path)->required();
  synth->add_option("--torus", torus_size, "torus size MxK")->required();
  auto* extract = frame->add_subcommand("extract", "decode torus and labelling");
  add_common(extract);
  extract->add_option("--frame", frame_path)->required();
  auto* validate = frame->add_subcommand("validate", "list frame violations");
  add_common(validate);
  validate->add_option("--frame", frame_path)->required();
  auto* closure = frame->add_subcommand("closure", "relevant closure structure");
  closure->add_option("--frame", frame_path)->required();
  closure->add_option("-o", out_path, "output file (default: stdout)");

  auto* ver = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  ver->add_option("suite", suite, "which suite")
      ->required()
      ->check(CLI::IsMember({"roundtrip", "lemma1", "dualpath"}));
  add_common(ver);
  ver->add_option("--max", max_bound,
                  "max torus dimension (roundtrip/dualpath) or case count (lemma1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compile->parsed()) {
      if (what == "omega") {
        emit(io::formula_to_text(gen::omega_sentence().formula), out_path);
      } else if (what == "finiteness") {
        emit(io::formula_to_text(gen::finiteness_sentence(dim).formula), out_path);
      } else {
        tiles::TileSet S = load_tiles(tiles_path);
        if (what == "tiling")
          emit(io::formula_to_text(tiles::tiling_sentence(S)), out_path);
        else if (what == "recurrent") {
          if (tile_pos >= S.tiles.size())
            throw std::runtime_error("--tile position out of range");
          emit(io::formula_to_text(tiles::recurrent_sentence(S.tiles[tile_pos], S)),
               out_path);
        } else if (what == "frame-inf")
          emit(io::formula_to_text(gen::frame_sentence_infinite(S).formula), out_path);
        else if (what == "frame-fin")
          emit(io::formula_to_text(gen::frame_sentence_finite(S).formula), out_path);
        else if (what == "reduction-grid")
          emit(io::formula_to_text(gen::reduction_sentence_grid(S).formula), out_path);
        else if (what == "reduction-torus")
          emit(io::formula_to_text(gen::reduction_sentence_torus(S).formula), out_path);
        else if (what == "scheme-grid")
          emit(io::scheme_to_text(gen::scheme_grid(S)), out_path);
        else if (what == "scheme-torus")
          emit(io::scheme_to_text(gen::scheme_torus(S)), out_path);
        else if (what == "scheme-recurrence")
          emit(io::scheme_to_text(gen::scheme_recurrence(S)), out_path);
      }
      return 0;
    }

    if (mc->parsed()) {
      fo::FiniteStructure M =
          io::structure_from_text(io::read_file(structure_path));
      fo::FormulaPtr f = io::formula_from_text(io::read_file(formula_path));
      bool holds = fo::eval(M, f);
      std::cout << (holds ? "true" : "false") << "\n";
      return holds ? 0 : 1;
    }

    if (solve->parsed()) {
      tiles::TileSet S = load_tiles(tiles_path);
      auto sol = tiles::solve_torus(S, max_bound, max_bound);
      if (!sol) {
        std::cout << "no torus up to " << max_bound << "x" << max_bound << "\n";
        return 1;
      }
      auto [m, k, L] = *sol;
      std::cout << m << " " << k << "\n";
      if (!out_path.empty()) io::write_file_atomic(out_path, io::labelling_to_text(L, S));
      return 0;
    }

    if (check->parsed()) {
      tiles::TileSet S = load_tiles(tiles_path);
      auto [m, k] = parse_torus(torus_size);
      tiles::Labelling L =
          io::labelling_from_text(io::read_file(labelling_path), S);
      bool ok = tiles::is_valid_tiling(tiles::build_torus(m, k), S, L);
      std::cout << (ok ? "valid" : "invalid") << "\n";
      return ok ? 0 : 1;
    }

    if (synth->parsed()) {
      tiles::TileSet S = load_tiles(tiles_path);
      auto [m, k] = parse_torus(torus_size);
      tiles::Labelling L =
          io::labelling_from_text(io::read_file(labelling_path), S);
      emit(io::frame_to_text(frames::synthesize_frame(m, k, L, S)), out_path);
      return 0;
    }

    if (extract->parsed()) {
      tiles::TileSet S = load_tiles(tiles_path);
      frames::FiniteCartesianFrame f =
          io::frame_from_text(io::read_file(frame_path));
      auto [torus, L] = frames::extract_torus(f, S);
      int m = 0, k = 0;
      while (torus.index.count(tiles::cell_id(m, 0))) ++m;
      while (torus.index.count(tiles::cell_id(0, k))) ++k;
      std::cout << m << " " << k << "\n";
      if (!out_path.empty()) io::write_file_atomic(out_path, io::labelling_to_text(L, S));
      return 0;
    }

    if (validate->parsed()) {
      tiles::TileSet S = load_tiles(tiles_path);
      frames::FiniteCartesianFrame f =
          io::frame_from_text(io::read_file(frame_path));
      auto violations = frames::validate_frame(f, S);
      for (const auto& v : violations) std::cout << v << "\n";
      return violations.empty() ? 0 : 1;
    }

    if (closure->parsed()) {
      frames::FiniteCartesianFrame f =
          io::frame_from_text(io::read_file(frame_path));
      emit(io::structure_to_text(frames::relevant_closure(f)), out_path);
      return 0;
    }

    if (ver->parsed()) {
      if (suite == "lemma1") {
        int cases = ver->count("--max") ? max_bound : 200;
        return report_outcome(verify::lemma1(cases, 3, 9001));
      }
      tiles::TileSet S = load_tiles(tiles_path);
      if (suite == "roundtrip")
        return report_outcome(verify::roundtrip(S, max_bound, 50, 9002));
      return report_outcome(verify::dualpath(S, max_bound, 5, 9003));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
