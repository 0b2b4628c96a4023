#include <fstream>
#include <ostream>

#include "common.h"
#include "splitwise/generators.h"
#include "splitwise/instance_io.h"

namespace splitwise::cli {

int RunGen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return HandleErrors(err, [&]() -> int {
    Instance inst;
    if (opt.kind == "grid") {
      GridInstance grid =
          GenerateGridAdversarial(opt.n, opt.c_star, opt.relaxed ? GridRange::kRelaxed : GridRange::kStrict);
      err << "n_star=" << grid.n_star << " rows=" << grid.rows << " good_sets=" << grid.good_sets.size() << '\n';
      inst = std::move(grid.instance);
    } else if (opt.kind == "reduction") {
      std::ifstream file(opt.sets_path);
      if (!file) throw ParseError("cannot read set-cover instance " + opt.sets_path);
      ReductionInstance red = GenerateSetCoverReduction(ReadSetSystemText(file), opt.r);
      err << "q=" << red.q << " ell=" << red.ell << " n=" << red.n << " ratio=" << ToString(red.ratio) << '\n';
      inst = std::move(red.instance);
    } else if (opt.kind == "random") {
      RandomSpec spec;
      spec.n = opt.n;
      spec.m = opt.m;
      spec.k = opt.k;
      spec.seed = opt.seed;
      spec.profile = ParseWeightProfile(opt.profile);
      spec.ratio = ParseRational(opt.ratio);
      spec.skew_shape = opt.skew;
      inst = GenerateRandom(spec);
    } else {
      throw ParseError("unknown generator: " + opt.kind);
    }
    if (opt.json) {
      WriteInstanceJson(out, inst);
    } else {
      WriteInstanceText(out, inst);
    }
    return kOk;
  });
}

}  // namespace splitwise::cli
