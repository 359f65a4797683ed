#include "sprite/bridge/ws_server.hpp"

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>

namespace sprite::bridge {

namespace {

namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;

std::optional<std::string> robot_from_target(std::string_view target) {
  constexpr std::string_view prefix = "/robot/";
  if (target.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view id = target.substr(prefix.size());
  if (!is_valid_robot_id(id)) return std::nullopt;
  return std::string(id);
}

class Session : public std::enable_shared_from_this<Session> {
 public:
  Session(tcp::socket socket, Broker& broker, std::atomic<std::size_t>& live)
      : ws_(std::move(socket)), broker_(broker), live_(live) {}

  ~Session() {
    if (sub_) broker_.unsubscribe(sub_);
    if (accepted_) --live_;
  }

  void run() {
    http::async_read(ws_.next_layer(), buffer_, req_,
                     [self = shared_from_this()](beast::error_code ec, std::size_t) { self->on_request(ec); });
  }

 private:
  void on_request(beast::error_code ec) {
    if (ec) return;
    const auto robot = robot_from_target(std::string_view(req_.target().data(), req_.target().size()));
    if (!robot || !websocket::is_upgrade(req_)) {
      reject(robot ? http::status::bad_request : http::status::not_found);
      return;
    }
    robot_ = *robot;
    ws_.set_option(websocket::stream_base::decorator(
        [](websocket::response_type& res) { res.set(http::field::server, "sprite-bridge"); }));
    ws_.async_accept(req_, [self = shared_from_this()](beast::error_code ec) { self->on_accept(ec); });
  }

  void reject(http::status status) {
    auto res = std::make_shared<http::response<http::string_body>>(status, req_.version());
    res->set(http::field::content_type, "text/plain");
    res->keep_alive(false);
    res->body() = status == http::status::not_found ? "no such endpoint; use /robot/<id>\n" : "websocket only\n";
    res->prepare_payload();
    http::async_write(ws_.next_layer(), *res, [self = shared_from_this(), res](beast::error_code, std::size_t) {
      beast::error_code ignored;
      self->ws_.next_layer().shutdown(tcp::socket::shutdown_send, ignored);
    });
  }

  void on_accept(beast::error_code ec) {
    if (ec) return;
    accepted_ = true;
    ++live_;
    ws_.text(true);
    sub_ = broker_.subscribe(robot_);
    std::weak_ptr<Session> weak = shared_from_this();
    sub_->set_notify([weak, ex = ws_.get_executor()] {
      net::post(ex, [weak] {
        if (auto s = weak.lock()) s->drain();
      });
    });
    drain();
    read();
  }

  void read() {
    ws_.async_read(in_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->done_ = true;
        return;
      }
      self->in_.consume(self->in_.size());
      self->read();
    });
  }

  void drain() {
    if (writing_ || done_ || !sub_) return;
    auto msg = sub_->try_pop();
    if (!msg) {
      if (sub_->closed()) {
        done_ = true;
        const auto reason = sub_->overflowed() ? websocket::close_code::policy_error : websocket::close_code::going_away;
        ws_.async_close(reason, [self = shared_from_this()](beast::error_code) {});
      }
      return;
    }
    out_ = std::move(*msg);
    writing_ = true;
    ws_.async_write(net::buffer(out_), [self = shared_from_this()](beast::error_code ec, std::size_t) {
      self->writing_ = false;
      if (ec) {
        self->done_ = true;
        return;
      }
      self->drain();
    });
  }

  websocket::stream<tcp::socket> ws_;
  Broker& broker_;
  std::atomic<std::size_t>& live_;
  beast::flat_buffer buffer_;
  beast::flat_buffer in_;
  http::request<http::string_body> req_;
  std::string robot_;
  std::shared_ptr<Subscription> sub_;
  std::string out_;
  bool accepted_ = false;
  bool writing_ = false;
  bool done_ = false;
};

}  // namespace

struct WsServer::Impl {
  Broker& broker;
  std::string address;
  unsigned short port;
  net::io_context ioc{1};
  tcp::acceptor acceptor{ioc};
  std::thread thread;
  std::atomic<std::size_t> live{0};
  bool started = false;

  Impl(Broker& b, std::string a, unsigned short p) : broker(b), address(std::move(a)), port(p) {}

  void accept() {
    acceptor.async_accept([this](beast::error_code ec, tcp::socket socket) {
      if (ec == net::error::operation_aborted) return;
      if (!ec) std::make_shared<Session>(std::move(socket), broker, live)->run();
      accept();
    });
  }
};

WsServer::WsServer(Broker& broker, std::string address, unsigned short port)
    : impl_(std::make_unique<Impl>(broker, std::move(address), port)) {}

WsServer::~WsServer() { stop(); }

void WsServer::start() {
  if (impl_->started) return;
  const tcp::endpoint ep(net::ip::make_address(impl_->address), impl_->port);
  impl_->acceptor.open(ep.protocol());
  impl_->acceptor.set_option(net::socket_base::reuse_address(true));
  impl_->acceptor.bind(ep);
  impl_->acceptor.listen();
  impl_->port = impl_->acceptor.local_endpoint().port();
  impl_->started = true;
  impl_->accept();
  impl_->thread = std::thread([this] { impl_->ioc.run(); });
}

void WsServer::stop() {
  if (!impl_ || !impl_->started) return;
  impl_->ioc.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
  beast::error_code ignored;
  impl_->acceptor.close(ignored);
  impl_->started = false;
}

unsigned short WsServer::port() const { return impl_->port; }

std::size_t WsServer::sessions() const { return impl_->live.load(); }

}  // namespace sprite::bridge
