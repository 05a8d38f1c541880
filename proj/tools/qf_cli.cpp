// Copyright 2026 The qframe Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qf_cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qf/qf.hpp"

namespace qf::cli {

namespace {

const std::vector<std::string> kLanguages{"xasm", "quil", "openqasm"};

struct Options {
    std::string file;
    std::string language;
    std::string kernel;
    std::string out;
    std::string to;
    std::int64_t shots = -1;
    std::int64_t seed = -1;
    std::string accelerator = "sim";
    std::string endpoint;
    std::string params;
    std::string observable;
    std::string optimizer;
    std::int64_t maxeval = 500;
    double step = 0.05;
    std::string initial;
    std::string target;
    std::string host = "127.0.0.1";
    int port = 8000;
    int workers = 2;
};

std::string readFile(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::KeyMissing, "cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

bool endsWith(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string languageFor(const Options &o) {
    if (!o.language.empty()) {
        return o.language;
    }
    if (endsWith(o.file, ".quil")) {
        return "quil";
    }
    if (endsWith(o.file, ".qasm")) {
        return "openqasm";
    }
    return "xasm";
}

// JSON IR, directive-annotated source, or plain kernels in one of the dialects.
ir::IRContainer loadProgram(const Options &o) {
    const auto text = readFile(o.file);
    ir::IRContainer ir;
    if (endsWith(o.file, ".json")) {
        ir = ir::deserializeIR(text);
    } else if (const auto first = text.find_first_not_of(" \t\r\n");
               first != std::string::npos && text[first] == '.') {
        for (const auto &name : qasm(text)) {
            ir.addComposite(getCompiled(name));
        }
    } else {
        ir = getCompiler(languageFor(o))->compile(text);
    }
    if (ir.size() == 0) {
        fail(ErrorCode::NameNotCompiled, "no kernels found in " + o.file);
    }
    return ir;
}

// The named kernel, or the last one (entry kernels follow the kernels they call).
ir::CompositePtr selectKernel(const ir::IRContainer &ir, const std::string &name) {
    if (name.empty()) {
        return ir.composites().back();
    }
    if (!ir.hasComposite(name)) {
        fail(ErrorCode::NameNotCompiled, name);
    }
    return ir.getComposite(name);
}

std::vector<double> parseReals(const std::string &text) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream item(token);
        double v = 0.0;
        while (item >> v) {
            values.push_back(v);
        }
        if (!item.eof()) {
            fail(ErrorCode::BadOption, "not a number list: " + text);
        }
    }
    return values;
}

std::string joinReals(const std::vector<double> &values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? " " : "") + ir::formatReal(values[i]);
    }
    return out;
}

obs::ObservablePtr parseObservable(const std::string &spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        fail(ErrorCode::BadOption, "observable must be written kind:text, e.g. pauli:Z0");
    }
    return getObservable(spec.substr(0, colon), spec.substr(colon + 1));
}

HetMap acceleratorOptions(const Options &o, std::int64_t defaultShots) {
    HetMap options;
    const auto shots = o.shots < 0 ? defaultShots : o.shots;
    if (shots > 0) {
        options.insert("shots", shots);
    }
    if (o.seed >= 0) {
        options.insert("seed", o.seed);
    }
    if (!o.endpoint.empty()) {
        options.insert("endpoint", o.endpoint);
    }
    return options;
}

HetMap optimizerOptions(const Options &o, std::size_t dimension) {
    HetMap options{{"maxeval", o.maxeval}, {"step", o.step}};
    if (!o.initial.empty()) {
        options.insert("initial-parameters", parseReals(o.initial));
    } else {
        options.insert("initial-parameters", std::vector<double>(dimension, 0.0));
    }
    return options;
}

void printCounts(const QuantumBuffer &buffer, std::ostream &out) {
    for (const auto &[bits, count] : buffer.counts()) {
        out << bits << ' ' << count << '\n';
    }
}

int compileCommand(const Options &o, std::ostream &out) {
    const auto ir = loadProgram(o);
    for (const auto &c : ir.composites()) {
        out << c->name() << ' ' << c->nInstructions() << '\n';
    }
    if (!o.out.empty()) {
        std::ofstream file(o.out);
        file << ir::serializeIR(ir) << '\n';
        if (!file) {
            fail(ErrorCode::KeyMissing, "cannot write " + o.out);
        }
    }
    return kSuccess;
}

int translateCommand(const Options &o, std::ostream &out) {
    const auto ir = loadProgram(o);
    const auto target = getCompiler(o.to);
    if (!o.kernel.empty()) {
        out << target->translate(*selectKernel(ir, o.kernel));
        return kSuccess;
    }
    for (const auto &c : ir.composites()) {
        out << target->translate(*c);
    }
    return kSuccess;
}

int runCommand(const Options &o, std::ostream &out) {
    const auto ir = loadProgram(o);
    auto program = selectKernel(ir, o.kernel);
    const auto values = parseReals(o.params);
    const auto concrete = std::make_shared<ir::Composite>(program->evaluate(values));
    auto buffer = qalloc(std::max<std::size_t>(concrete->nQubits(), 1));
    getAccelerator(o.accelerator, acceleratorOptions(o, 1024))->execute(buffer, *concrete);
    printCounts(*buffer, out);
    const auto &meta = buffer->metadata();
    if (meta.contains("ground-energy")) {
        out << "ground-energy " << ir::formatReal(meta.get<double>("ground-energy")) << '\n';
    }
    if (buffer->counts().empty() && meta.contains("exp-val-z")) {
        out << "exp-val-z " << ir::formatReal(meta.get<double>("exp-val-z")) << '\n';
    }
    return kSuccess;
}

int vqeCommand(const Options &o, std::ostream &out) {
    const auto ir = loadProgram(o);
    auto ansatz = selectKernel(ir, o.kernel);
    auto observable = parseObservable(o.observable);
    const auto nQubits = std::max<std::size_t>(
        {ansatz->nQubits(), observable->toPauli().nQubits(), std::size_t{1}});
    auto vqe = getAlgorithm("vqe");
    vqe->initialize({{"ansatz", ansatz},
                     {"observable", observable},
                     {"accelerator", getAccelerator(o.accelerator, acceleratorOptions(o, 0))},
                     {"optimizer", getOptimizer(o.optimizer.empty() ? "neldermead" : o.optimizer,
                                                optimizerOptions(o, ansatz->variables().size()))}});
    auto buffer = qalloc(nQubits);
    vqe->execute(buffer);
    out << "opt-val " << ir::formatReal(buffer->metadata().get<double>("opt-val")) << '\n';
    out << "opt-params " << joinReals(buffer->metadata().get<std::vector<double>>("opt-params"))
        << '\n';
    return kSuccess;
}

int ddclCommand(const Options &o, std::ostream &out) {
    const auto ir = loadProgram(o);
    auto ansatz = selectKernel(ir, o.kernel);
    auto ddcl = getAlgorithm("ddcl");
    ddcl->initialize(
        {{"ansatz", ansatz},
         {"target_dist", parseReals(o.target)},
         {"accelerator", getAccelerator(o.accelerator, acceleratorOptions(o, 0))},
         {"optimizer", getOptimizer(o.optimizer.empty() ? "gd-paramshift" : o.optimizer,
                                    optimizerOptions(o, ansatz->variables().size()))}});
    auto buffer = qalloc(std::max<std::size_t>(ansatz->nQubits(), 1));
    ddcl->execute(buffer);
    out << "opt-val " << ir::formatReal(buffer->metadata().get<double>("opt-val")) << '\n';
    out << "opt-params " << joinReals(buffer->metadata().get<std::vector<double>>("opt-params"))
        << '\n';
    return kSuccess;
}

std::atomic<bool> interrupted{false};

extern "C" void onSignal(int) { interrupted = true; }

int serveCommand(const Options &o, std::ostream &out) {
    ReferenceServer server(o.host, static_cast<std::size_t>(std::max(o.workers, 1)));
    server.start(o.port);
    out << "listening " << server.endpoint() << std::endl;
    interrupted = false;
    auto previousInt = std::signal(SIGINT, onSignal);
    auto previousTerm = std::signal(SIGTERM, onSignal);
    while (!interrupted) {
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    std::signal(SIGINT, previousInt);
    std::signal(SIGTERM, previousTerm);
    server.stop();
    return kSuccess;
}

void addProgramOptions(CLI::App *cmd, Options &o, const std::string &what) {
    cmd->add_option("file", o.file, what)->required();
    cmd->add_option("-l,--language", o.language, "Source dialect (default: from the file name)")
        ->check(CLI::IsMember(kLanguages));
    cmd->add_option("-k,--kernel", o.kernel, "Kernel to use (default: the last one)");
}

void addExecutionOptions(CLI::App *cmd, Options &o) {
    cmd->add_option("--shots", o.shots, "Samples per circuit; 0 selects exact mode")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--seed", o.seed, "Sampling seed")->check(CLI::NonNegativeNumber);
    cmd->add_option("-a,--accelerator", o.accelerator, "Accelerator name");
    cmd->add_option("--endpoint", o.endpoint, "Remote job server URL");
}

void addOptimizerOptions(CLI::App *cmd, Options &o) {
    cmd->add_option("--optimizer", o.optimizer, "Optimizer name");
    cmd->add_option("--maxeval", o.maxeval, "Evaluation budget")->check(CLI::PositiveNumber);
    cmd->add_option("--step", o.step, "Gradient-descent step")->check(CLI::PositiveNumber);
    cmd->add_option("--initial", o.initial, "Comma-separated starting parameters");
}

struct FrameworkScope {
    bool owner = false;
    FrameworkScope(bool verbose, bool pluginList, std::ostream &out) {
        if (isInitialized()) {
            return;
        }
        std::vector<std::string> args{"qf"};
        if (verbose) {
            args.emplace_back("--verbose");
        }
        if (pluginList) {
            args.emplace_back("--plugin-list");
        }
        initialize(args, out);
        owner = true;
    }
    ~FrameworkScope() {
        if (owner) {
            finalize();
        }
    }
    FrameworkScope(const FrameworkScope &) = delete;
    FrameworkScope &operator=(const FrameworkScope &) = delete;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    bool pluginList = false;
    bool verboseFlag = false;

    CLI::App app{"Compile, translate and run quantum programs."};
    app.name("qf");
    app.require_subcommand(0, 1);
    app.add_flag("--plugin-list", pluginList, "List registered services and exit");
    app.add_flag("-v,--verbose", verboseFlag, "Verbose diagnostics");

    auto *compile = app.add_subcommand("compile", "Compile kernels to JSON IR");
    addProgramOptions(compile, o, "Source file");
    compile->add_option("-o,--out", o.out, "Write the JSON IR here");

    auto *translate = app.add_subcommand("translate", "Translate kernels to another dialect");
    addProgramOptions(translate, o, "Source or JSON IR file");
    translate->add_option("-t,--to", o.to, "Target dialect")
        ->required()
        ->check(CLI::IsMember(kLanguages));

    auto *runCmd = app.add_subcommand("run", "Execute a kernel and print counts");
    addProgramOptions(runCmd, o, "Source or JSON IR file");
    addExecutionOptions(runCmd, o);
    runCmd->add_option("-p,--params", o.params, "Comma-separated parameter values");

    auto *vqe = app.add_subcommand("vqe", "Minimize an observable over an ansatz");
    addProgramOptions(vqe, o, "Ansatz source or JSON IR file");
    vqe->add_option("--ansatz", o.file, "Ansatz file (same as the positional argument)");
    vqe->add_option("--observable", o.observable, "pauli:<terms> or fermion:<terms>")->required();
    addExecutionOptions(vqe, o);
    addOptimizerOptions(vqe, o);

    auto *ddcl = app.add_subcommand("ddcl", "Fit an ansatz's output distribution to a target");
    addProgramOptions(ddcl, o, "Ansatz source or JSON IR file");
    ddcl->add_option("--target", o.target, "Comma-separated target distribution")->required();
    addExecutionOptions(ddcl, o);
    addOptimizerOptions(ddcl, o);

    auto *serve = app.add_subcommand("serve", "Run the reference job server");
    serve->add_option("--host", o.host, "Bind address");
    serve->add_option("--port", o.port, "Port")->check(CLI::Range(1, 65535));
    serve->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);

    // --ansatz may stand in for the positional file
    for (auto *cmd : {vqe, ddcl}) {
        cmd->get_option("file")->required(false);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (!pluginList && app.get_subcommands().empty()) {
            throw CLI::CallForHelp();
        }
        for (auto *cmd : {vqe, ddcl}) {
            if (cmd->parsed() && o.file.empty()) {
                throw CLI::RequiredError("--ansatz");
            }
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        FrameworkScope scope(verboseFlag, pluginList, out);
        if (pluginList) {
            return kSuccess;
        }
        if (compile->parsed()) {
            return compileCommand(o, out);
        }
        if (translate->parsed()) {
            return translateCommand(o, out);
        }
        if (runCmd->parsed()) {
            return runCommand(o, out);
        }
        if (vqe->parsed()) {
            return vqeCommand(o, out);
        }
        if (ddcl->parsed()) {
            return ddclCommand(o, out);
        }
        return serveCommand(o, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

} // namespace qf::cli
