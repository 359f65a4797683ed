#pragma once

#include <atomic>
#include <memory>
#include <string>
#include <thread>

#include "sprite/bridge/broker.hpp"

namespace sprite::bridge {

// WebSocket endpoint /robot/<id>. Each connection subscribes to that robot;
// other paths get a 404. Incoming client text is ignored.
class WsServer {
 public:
  // port 0 picks a free port.
  WsServer(Broker& broker, std::string address = "127.0.0.1", unsigned short port = 0);
  ~WsServer();
  WsServer(const WsServer&) = delete;
  WsServer& operator=(const WsServer&) = delete;

  void start();
  void stop();
  unsigned short port() const;
  std::size_t sessions() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sprite::bridge
