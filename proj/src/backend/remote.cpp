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


#include "qf/backend/remote.hpp"

#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <random>
#include <thread>

#include "qf/backend/simulator.hpp"
#include "qf/ir/serialize.hpp"

namespace qf {

namespace {

using nlohmann::json;

json toJson(const HetMap &map) {
    json out = json::object();
    for (const auto &[key, value] : map) {
        std::visit(
            [&, &key = key](const auto &v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, PairList>) {
                    json pairs = json::array();
                    for (const auto &[a, b] : v) {
                        pairs.push_back({a, b});
                    }
                    out[key] = pairs;
                } else if constexpr (!std::is_same_v<T, Handle>) {
                    out[key] = v;
                }
            },
            value.storage());
    }
    return out;
}

HetValue fromJson(const json &v) {
    if (v.is_boolean()) {
        return v.get<bool>();
    }
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        if (std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_string(); }) &&
            !v.empty()) {
            return v.get<std::vector<std::string>>();
        }
        if (std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_number_integer(); }) &&
            !v.empty()) {
            return v.get<std::vector<std::int64_t>>();
        }
        if (std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_number(); })) {
            return v.get<std::vector<double>>();
        }
        PairList pairs;
        for (const auto &e : v) {
            pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
        }
        return pairs;
    }
    fail(ErrorCode::HttpError, "unsupported metadata value " + v.dump());
}

HetMap hetMapFromJson(const json &object) {
    HetMap out;
    for (const auto &[key, value] : object.items()) {
        out.insert(key, fromJson(value));
    }
    return out;
}

std::size_t programWidth(const ir::Composite &program) {
    std::size_t width = 0;
    for (const auto &inst : program.instructions()) {
        for (auto b : inst.bits()) {
            width = std::max(width, b + 1);
        }
        for (auto b : inst.cbits()) {
            width = std::max(width, b + 1);
        }
    }
    return width;
}

httplib::Client makeClient(const std::string &endpoint, std::chrono::milliseconds timeout) {
    httplib::Client client(endpoint);
    if (!client.is_valid()) {
        fail(ErrorCode::HttpError, "invalid endpoint " + endpoint);
    }
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    return client;
}

[[noreturn]] void transportFailure(const std::string &endpoint, httplib::Error error) {
    fail(ErrorCode::HttpError, endpoint + ": " + httplib::to_string(error));
}

} // namespace

std::string resolveEndpoint(const HetMap &options) {
    if (options.contains("endpoint")) {
        return options.get<std::string>("endpoint");
    }
    if (const char *env = std::getenv("QF_REMOTE_ENDPOINT"); env != nullptr && *env != '\0') {
        return env;
    }
    return std::string(kDefaultRemoteEndpoint);
}

// ---------------------------------------------------------------------------- client

RemoteClient::RemoteClient(std::string endpoint, std::chrono::milliseconds requestTimeout)
    : endpoint_(std::move(endpoint)), requestTimeout_(requestTimeout) {}

std::string RemoteClient::submit(const ir::Composite &program, std::int64_t shots,
                                 std::optional<std::int64_t> seed) const {
    json body{{"shots", shots}, {"program", json::parse(ir::serializeComposite(program))}};
    if (seed) {
        body["seed"] = *seed;
    }
    auto client = makeClient(endpoint_, requestTimeout_);
    auto res = client.Post("/jobs", body.dump(), "application/json");
    if (!res) {
        transportFailure(endpoint_, res.error());
    }
    if (res->status != 201) {
        fail(ErrorCode::HttpError, "POST /jobs returned " + std::to_string(res->status) + ": " +
                                       res->body);
    }
    try {
        return json::parse(res->body).at("id").get<std::string>();
    } catch (const json::exception &e) {
        fail(ErrorCode::HttpError, std::string("malformed submit reply: ") + e.what());
    }
}

JobState RemoteClient::poll(const std::string &id) const {
    auto client = makeClient(endpoint_, requestTimeout_);
    auto res = client.Get("/jobs/" + id);
    if (!res) {
        transportFailure(endpoint_, res.error());
    }
    if (res->status == 404) {
        fail(ErrorCode::JobNotFound, id);
    }
    if (res->status != 200) {
        fail(ErrorCode::HttpError, "GET /jobs/" + id + " returned " + std::to_string(res->status));
    }
    JobState state;
    try {
        const auto reply = json::parse(res->body);
        state.status = reply.at("status").get<std::string>();
        if (reply.contains("counts")) {
            for (const auto &[bits, count] : reply["counts"].items()) {
                state.counts[bits] = count.get<std::int64_t>();
            }
        }
        if (reply.contains("metadata")) {
            state.metadata = hetMapFromJson(reply["metadata"]);
        }
    } catch (const json::exception &e) {
        fail(ErrorCode::HttpError, std::string("malformed job reply: ") + e.what());
    }
    return state;
}

JobState RemoteClient::wait(const std::string &id, std::chrono::milliseconds deadline,
                            std::chrono::milliseconds interval) const {
    const auto until = std::chrono::steady_clock::now() + deadline;
    while (true) {
        auto state = poll(id);
        if (state.status == "done") {
            return state;
        }
        if (std::chrono::steady_clock::now() + interval > until) {
            fail(ErrorCode::Timeout, "job " + id + " not done after " +
                                         std::to_string(deadline.count()) + " ms");
        }
        std::this_thread::sleep_for(interval);
    }
}

// ---------------------------------------------------------------------------- accelerator

void RemoteAccelerator::execute(const BufferPtr &buffer, const ir::Composite &program) {
    detail::checkProgram(program, *buffer);
    const auto shots = config_.getOr<std::int64_t>("shots", 1024);
    std::optional<std::int64_t> seed;
    if (config_.contains("seed")) {
        seed = config_.get<std::int64_t>("seed");
    }
    const auto timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(1000.0 * config_.getOr<double>("timeout", 30.0)));
    const auto interval =
        std::chrono::milliseconds(config_.getOr<std::int64_t>("poll-interval", 20));

    RemoteClient client(resolveEndpoint(config_), timeout);
    const auto state = client.wait(client.submit(program, shots, seed), timeout, interval);
    if (state.metadata.contains("error")) {
        fail(ErrorCode::HttpError, "remote job failed: " + state.metadata.get<std::string>("error"));
    }
    for (const auto &[bits, count] : state.counts) {
        if (bits.size() > buffer->size()) {
            fail(ErrorCode::InvalidSize, "remote bitstring " + bits + " exceeds the buffer");
        }
        buffer->appendMeasurement(bits + std::string(buffer->size() - bits.size(), '0'), count);
    }
    buffer->metadata().merge(state.metadata);
}

// ---------------------------------------------------------------------------- server

struct ReferenceServer::Impl {
    struct Job {
        std::string status = "queued";
        ir::Composite program;
        std::int64_t shots = 0;
        std::optional<std::int64_t> seed;
        json result;
    };

    std::string host;
    std::size_t nWorkers;
    httplib::Server server;
    std::thread listener;
    std::vector<std::thread> workers;
    std::atomic<int> port{0};

    std::mutex mutex;
    std::condition_variable ready;
    std::map<std::string, Job> jobs;
    std::deque<std::string> queue;
    std::uint64_t nextId = 1;
    bool stopping = false;

    void routes() {
        server.Post("/jobs", [this](const httplib::Request &req, httplib::Response &res) {
            Job job;
            try {
                const auto body = json::parse(req.body);
                job.shots = body.at("shots").get<std::int64_t>();
                if (body.contains("seed") && !body["seed"].is_null()) {
                    job.seed = body["seed"].get<std::int64_t>();
                }
                job.program = ir::deserializeComposite(body.at("program").dump());
                const auto width = programWidth(job.program);
                if (job.shots <= 0 || width == 0 || width > StatevectorSimulator::kMaxQubits ||
                    !job.program.symbols().empty()) {
                    throw std::invalid_argument("program or shots not runnable");
                }
            } catch (const std::exception &e) {
                res.status = 400;
                res.set_content(json{{"error", e.what()}}.dump(), "application/json");
                return;
            }
            std::string id;
            {
                std::lock_guard lock(mutex);
                id = "job-" + std::to_string(nextId++);
                jobs.emplace(id, std::move(job));
                queue.push_back(id);
            }
            ready.notify_one();
            res.status = 201;
            res.set_content(json{{"id", id}}.dump(), "application/json");
        });

        server.Get(R"(/jobs/([^/]+))", [this](const httplib::Request &req, httplib::Response &res) {
            std::lock_guard lock(mutex);
            auto it = jobs.find(req.matches[1].str());
            if (it == jobs.end()) {
                res.status = 404;
                res.set_content(json{{"error", "no such job"}}.dump(), "application/json");
                return;
            }
            json reply{{"status", it->second.status}};
            if (it->second.status == "done") {
                reply.update(it->second.result);
            }
            res.status = 200;
            res.set_content(reply.dump(), "application/json");
        });
    }

    void work() {
        while (true) {
            std::string id;
            Job job;
            {
                std::unique_lock lock(mutex);
                ready.wait(lock, [this] { return stopping || !queue.empty(); });
                if (stopping) {
                    return;
                }
                id = queue.front();
                queue.pop_front();
                auto &stored = jobs.at(id);
                stored.status = "running";
                job = stored;
            }
            json result;
            try {
                auto buffer = std::make_shared<QuantumBuffer>(programWidth(job.program));
                StatevectorSimulator sim;
                HetMap options{{"shots", job.shots}};
                if (job.seed) {
                    options.insert("seed", *job.seed);
                } else {
                    options.insert("seed", static_cast<std::int64_t>(std::random_device{}() >> 1));
                }
                sim.updateConfiguration(options);
                sim.execute(buffer, job.program);
                json counts = json::object();
                for (const auto &[bits, count] : buffer->counts()) {
                    counts[bits] = count;
                }
                result = {{"counts", counts}, {"metadata", toJson(buffer->metadata())}};
            } catch (const std::exception &e) {
                result = {{"metadata", {{"error", e.what()}}}};
            }
            std::lock_guard lock(mutex);
            auto &stored = jobs.at(id);
            stored.result = std::move(result);
            stored.status = "done";
        }
    }

    void startWorkers() {
        for (std::size_t i = 0; i < nWorkers; ++i) {
            workers.emplace_back([this] { work(); });
        }
    }

    void shutdown() {
        server.stop();
        {
            std::lock_guard lock(mutex);
            stopping = true;
        }
        ready.notify_all();
        for (auto &w : workers) {
            if (w.joinable()) {
                w.join();
            }
        }
        workers.clear();
        if (listener.joinable()) {
            listener.join();
        }
    }
};

ReferenceServer::ReferenceServer(std::string host, std::size_t workers)
    : impl_(std::make_unique<Impl>()) {
    impl_->host = std::move(host);
    impl_->nWorkers = std::max<std::size_t>(workers, 1);
    // SO_REUSEADDR only: the library default adds SO_REUSEPORT, which lets a second server
    // share a port that is already being served
    impl_->server.set_socket_options([](socket_t sock) {
        int yes = 1;
        setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    impl_->routes();
}

ReferenceServer::~ReferenceServer() { stop(); }

int ReferenceServer::start(int port) {
    const int bound = port == 0 ? impl_->server.bind_to_any_port(impl_->host)
                                : (impl_->server.bind_to_port(impl_->host, port) ? port : -1);
    if (bound < 0) {
        fail(ErrorCode::HttpError, "cannot bind " + impl_->host + ":" + std::to_string(port));
    }
    impl_->port = bound;
    impl_->startWorkers();
    impl_->listener = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
    return bound;
}

void ReferenceServer::stop() {
    if (impl_) {
        impl_->shutdown();
    }
}

int ReferenceServer::port() const noexcept { return impl_->port; }

std::string ReferenceServer::endpoint() const {
    return "http://" + impl_->host + ":" + std::to_string(impl_->port);
}

} // namespace qf
