#include <exception>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ate/pipeline.hpp"
#include "ate/util.hpp"

namespace {

struct StageSpec {
    const char* name;
    const char* description;
    int (*run)(const ate::RunConfig&);
};

constexpr StageSpec kStages[] = {
    {"ingest", "Load and normalize the raw corpus", ate::run_ingest},
    {"extract", "Extract and filter candidate terms", ate::run_extract},
    {"embed", "Train (or import) word vectors", ate::run_embed},
    {"relindex", "Build the ranked relatedness index over candidate words", ate::run_relindex},
    {"score", "Run the configured base scorers", ate::run_score},
    {"seeds-propose", "Emit the top-z frequent candidates for verification", ate::run_seeds_propose},
    {"seeds-build", "Build the seed set from annotations (or unsupervised)", ate::run_seeds_build},
    {"smi", "Per-document graphs, personalised PageRank, importance aggregation", ate::run_smi},
    {"rerank", "Revise base rankings with the importance scores", ate::run_rerank},
    {"textrank", "Adapted-TextRank comparator over co-occurrence graphs", ate::run_textrank},
    {"eval", "Precision/recall reports against the ground truth", ate::run_eval},
    {"compare", "Join all eval reports into one CSV", ate::run_compare},
    {"diagnose", "Isolated-word and strongly-related-word statistics", ate::run_diagnose},
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semrerank: term extraction toolkit with relatedness-graph re-ranking"};
    app.require_subcommand(1);

    std::string config_path;
    unsigned threads_override = 0;
    std::size_t z_override = 0;
    std::string out_override;

    std::string selected;
    for (const auto& stage : kStages) {
        CLI::App* sub = app.add_subcommand(stage.name, stage.description);
        sub->add_option("-c,--config", config_path, "Run config file")->required();
        sub->add_option("--threads", threads_override, "Worker threads for the parallel stages");
        sub->add_option("--z", z_override, "Seed proposal size override");
        sub->add_option("--out", out_override, "Output directory override");
        sub->callback([&selected, name = stage.name] { selected = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        ate::RunConfig cfg = ate::RunConfig::load(config_path);
        if (threads_override > 0) cfg.threads = threads_override;
        if (z_override > 0) cfg.seeds_z = z_override;
        if (!out_override.empty()) cfg.output_dir = out_override;
        for (const auto& stage : kStages)
            if (selected == stage.name) return stage.run(cfg);
        std::cerr << "unknown subcommand\n";
        return ate::kExitConfigError;
    } catch (const ate::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return ate::kExitConfigError;
    } catch (const ate::data_error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return ate::kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return ate::kExitDataError;
    }
}
