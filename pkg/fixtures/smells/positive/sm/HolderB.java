package sm;

public class HolderB {

    int chave;
    int custo;
    int prazo;
}
