#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ctw/limits.hpp"
#include "workbench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ctw: exact cotorsion-pair workbench over prime fields"};
  std::string doc_path, job = "all", out_path, recheck_path;
  std::size_t max_dim = ctw::max_module_dim(), cap = ctw::default_cap();
  unsigned threads = 1;
  app.add_option("--doc", doc_path, "Workbench document (JSON)");
  app.add_option("--job", job, "Job id, comma-separated ids, or all");
  app.add_option("--out", out_path, "Write the report stream here instead of stdout");
  app.add_option("--recheck", recheck_path, "Re-verify the certificates of a stored report stream");
  app.add_option("--max-dim", max_dim, "Largest module dimension any construction may produce");
  app.add_option("--cap", cap, "Resolution / tower length cap");
  app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  CLI11_PARSE(app, argc, argv);

  if (doc_path.empty() == recheck_path.empty()) {
    std::cerr << "exactly one of --doc or --recheck is required\n";
    return 2;
  }
  ctw::set_max_module_dim(max_dim);
  ctw::set_default_cap(cap);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  ctw::wb::json out;
  try {
    if (!recheck_path.empty()) {
      std::ifstream in(recheck_path);
      if (!in) throw ctw::wb::DocumentError("cannot open report '" + recheck_path + "'");
      out = ctw::wb::recheck_reports(ctw::wb::json::parse(in));
    } else {
      out = ctw::wb::run_document(ctw::wb::Document::load(doc_path), job, threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = out.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
  }
  return ctw::wb::all_passed(out) ? 0 : 1;
}
