import { Client } from "./api.js";
import { mountApp } from "./app.js";

const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app root element");
}
const app = mountApp(root, new Client());
void app.newBoard();
