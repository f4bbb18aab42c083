import { bootstrap } from "./bootstrap";

bootstrap(document);
